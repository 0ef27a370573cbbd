//! Words in the generators `S`, `T` of the modular group.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactalg::{MatrixN, RingElem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gen {
    S,
    T,
}

/// A word in `S` and `T`, kept in normal form: adjacent letters use
/// different generators and no exponent is zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<(Gen, i64)>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Gen, i64)>) -> Self {
        let mut w = Word::identity();
        for (g, e) in pairs {
            w.push(g, e);
        }
        w
    }

    pub fn s() -> Self {
        Word::from_pairs([(Gen::S, 1)])
    }

    pub fn t() -> Self {
        Word::from_pairs([(Gen::T, 1)])
    }

    /// `R = ST`.
    pub fn r() -> Self {
        Word::from_pairs([(Gen::S, 1), (Gen::T, 1)])
    }

    /// `A = [S, R]`.
    pub fn a() -> Self {
        Word::commutator(&Word::s(), &Word::r())
    }

    /// `B = [S, R²]`.
    pub fn b() -> Self {
        Word::commutator(&Word::s(), &Word::r().pow(2))
    }

    fn push(&mut self, g: Gen, e: i64) {
        if e == 0 {
            return;
        }
        match self.letters.last_mut() {
            Some((h, f)) if *h == g => {
                *f += e;
                if *f == 0 {
                    self.letters.pop();
                }
            }
            _ => self.letters.push((g, e)),
        }
    }

    pub fn letters(&self) -> &[(Gen, i64)] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for &(g, e) in &other.letters {
            w.push(g, e);
        }
        w
    }

    pub fn inverse(&self) -> Word {
        Word::from_pairs(self.letters.iter().rev().map(|&(g, e)| (g, -e)))
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut w = Word::identity();
        for _ in 0..n.unsigned_abs() {
            w = w.concat(&base);
        }
        w
    }

    /// `[x, y] = x y x⁻¹ y⁻¹`.
    pub fn commutator(x: &Word, y: &Word) -> Word {
        x.concat(y).concat(&x.inverse()).concat(&y.inverse())
    }

    /// `g · self · g⁻¹`.
    pub fn conjugate_by(&self, g: &Word) -> Word {
        g.concat(self).concat(&g.inverse())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &(g, e)) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            let name = match g {
                Gen::S => "S",
                Gen::T => "T",
            };
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Whitespace-separated tokens `S`, `T`, `S^k`, `T^-k`, or `S-1`/`T-1`
    /// for the inverses.
    fn from_str(s: &str) -> Result<Word> {
        let mut w = Word::identity();
        for tok in s.split_whitespace() {
            let bad = || Error::Parse(format!("malformed word token {tok:?}"));
            let mut chars = tok.chars();
            let g = match chars.next() {
                Some('S') => Gen::S,
                Some('T') => Gen::T,
                _ => return Err(bad()),
            };
            let rest = chars.as_str();
            let e = match rest {
                "" => 1,
                "-1" => -1,
                _ => {
                    let digits = rest.strip_prefix('^').ok_or_else(bad)?;
                    let body = digits.strip_prefix('-').unwrap_or(digits);
                    if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
                        return Err(bad());
                    }
                    digits.parse::<i64>().map_err(|_| bad())?
                }
            };
            w.push(g, e);
        }
        Ok(w)
    }
}

/// Image of a word under the homomorphism determined by `S ↦ img_s`,
/// `T ↦ img_t`.
pub fn eval_word<R: RingElem>(
    w: &Word,
    img_s: &MatrixN<R>,
    img_t: &MatrixN<R>,
) -> Result<MatrixN<R>> {
    if img_s.size() != img_t.size() {
        return Err(Error::domain("generator images have different sizes"));
    }
    let sample = img_s.get(0, 0).clone();
    let mut acc = MatrixN::identity(img_s.size(), &sample);
    for &(g, e) in w.letters() {
        let m = match g {
            Gen::S => img_s,
            Gen::T => img_t,
        };
        acc = &acc * &m.pow(e)?;
    }
    Ok(acc)
}

/// True iff the images satisfy `S⁴ = 1` and `S² = (ST)³`.
pub fn relations_check<R: RingElem>(img_s: &MatrixN<R>, img_t: &MatrixN<R>) -> bool {
    if img_s.size() != img_t.size() {
        return false;
    }
    let s2 = img_s.pow(2).expect("non-negative power");
    let st = img_s * img_t;
    s2.pow(2).expect("non-negative power").is_identity() && st.pow(3).expect("non-negative power") == s2
}
