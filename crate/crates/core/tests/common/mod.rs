//! Strategies and oracles shared by the property suites and the acceptance run.
#![allow(dead_code)]

use proptest::prelude::*;

use phicong::modgroup::{Gen, Word};
use phicong::symplectic::Lagrangian;

use Lagrangian::{A, B, C, D};

/// A random word in `S` and `T` with exponents in `-e..=e`.
pub fn word_with(len: usize, e: i64) -> impl Strategy<Value = Word> {
    prop::collection::vec((any::<bool>(), -e..=e), 0..len).prop_map(|letters| {
        Word::from_pairs(
            letters
                .into_iter()
                .map(|(s, e)| (if s { Gen::S } else { Gen::T }, e)),
        )
    })
}

/// A word in `Γ(φ, m)`: a product of conjugates of `A^{km}`, `B^{km}` and
/// `T^{12k}`.
pub fn member_of(m: u64) -> impl Strategy<Value = Word> {
    prop::collection::vec((0u8..3, -2i64..=2, word_with(8, 5)), 1..4).prop_map(move |parts| {
        parts.into_iter().fold(Word::identity(), |acc, (kind, k, g)| {
            let core = match kind {
                0 => Word::a().pow(k * m as i64),
                1 => Word::b().pow(k * m as i64),
                _ => Word::t().pow(12 * k),
            };
            acc.concat(&core.conjugate_by(&g))
        })
    })
}

/// A level together with a word in `Γ(φ, level)`.
pub fn leveled() -> impl Strategy<Value = (u64, Word)> {
    (1u64..=24).prop_flat_map(|m| member_of(m).prop_map(move |w| (m, w)))
}

/// Closed-form actions of `ρ(S)` and `ρ(R)` on the four families.
pub struct Oracle {
    p: i128,
    x: i128,
    y: i128,
}

impl Oracle {
    pub fn new(p: u64, x: u64) -> Oracle {
        let p = p as i128;
        let x = x as i128;
        let y = (1..p).find(|y| x * y % p == 1).unwrap();
        Oracle { p, x, y }
    }

    fn m(&self, v: i128) -> u64 {
        v.rem_euclid(self.p) as u64
    }

    fn inv(&self, v: i128) -> i128 {
        let v = v.rem_euclid(self.p);
        (1..self.p).find(|w| v * w % self.p == 1).expect("unit")
    }

    fn div(&self, n: i128, d: i128) -> u64 {
        self.m(n.rem_euclid(self.p) * self.inv(d))
    }

    pub fn s(&self, l: Lagrangian) -> Lagrangian {
        let (x, y) = (self.x, self.y);
        match l {
            A(a, b, c) => {
                let (a, b, c) = (a as i128, b as i128, c as i128);
                let d0 = (3 * a * a + b * c).rem_euclid(self.p);
                if d0 != 0 {
                    A(self.div(-a * x * y, d0), self.div(-c * x * x, d0), self.div(-b * y * y, d0))
                } else if b != 0 {
                    B(self.div(-a * x, b * y), self.div(-x * x, b))
                } else if c != 0 {
                    C(self.div(-y * y, c))
                } else {
                    D
                }
            }
            B(a, b) => {
                let (a, b) = (a as i128, b as i128);
                if b != 0 {
                    A(self.div(a * x * y, b), self.div(-x * x, b), self.div(3 * a * a * y * y, b))
                } else if a != 0 {
                    B(self.div(-x, 3 * a * y), 0)
                } else {
                    C(0)
                }
            }
            C(a) => {
                if a != 0 {
                    A(0, 0, self.div(-y * y, a as i128))
                } else {
                    B(0, 0)
                }
            }
            D => A(0, 0, 0),
        }
    }

    pub fn r(&self, l: Lagrangian) -> Lagrangian {
        let (x, y) = (self.x, self.y);
        match l {
            A(a, b, c) => {
                let (a, b, c) = (a as i128, b as i128, c as i128);
                let d0 = (3 * a * a + b * c).rem_euclid(self.p);
                if d0 != 0 {
                    A(
                        self.div(-x * y * (a * x * y + b * y * y + 3 * a * a + b * c), d0),
                        self.div(
                            x * x * (6 * a * x * y + 3 * b * y * y + 6 * a * a + 2 * b * c - c * x * x),
                            d0,
                        ),
                        self.div(-y * y * (b * y * y + 6 * a * a + 2 * b * c), d0),
                    )
                } else if b != 0 {
                    B(
                        self.div(-x * (a * x + b * y), b * y * y),
                        self.div(
                            x * x
                                * (6 * a * a * x * x + 6 * a * b * x * y + 2 * b * b * y * y
                                    - b * x * x * y * y),
                            b * b * y * y,
                        ),
                    )
                } else if c != 0 {
                    C(self.div(-(y * y * y * y + 2 * c * y * y), c))
                } else {
                    D
                }
            }
            B(a, b) => {
                let (a, b) = (a as i128, b as i128);
                if b != 0 {
                    A(
                        self.div(x * y * (3 * a * a * y * y + a * x * y - b), b),
                        self.div(x * x * (2 * b - 9 * a * a * y * y - 6 * a * x * y - x * x), b),
                        self.div(y * y * (3 * a * a * y * y - 2 * b), b),
                    )
                } else if a != 0 {
                    B(
                        self.div(-x * (3 * a * y + x), 3 * a * y * y),
                        self.div(
                            x * x * (18 * a * a * y * y + 18 * a * x * y + 6 * x * x),
                            9 * a * a * y * y,
                        ),
                    )
                } else {
                    C(self.m(-2 * y * y))
                }
            }
            C(a) => {
                let a = a as i128;
                if a != 0 {
                    A(
                        self.div(-x * y * (y * y + a), a),
                        self.div(x * x * (3 * y * y + 2 * a), a),
                        self.div(-y * y * (y * y + 2 * a), a),
                    )
                } else {
                    B(self.div(-x, y), self.m(2 * x * x))
                }
            }
            D => A(self.m(-x * y), self.m(2 * x * x), self.m(-2 * y * y)),
        }
    }
}

