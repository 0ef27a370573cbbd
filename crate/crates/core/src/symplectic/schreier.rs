//! Deterministic Schreier–Sims.

use num_bigint::BigUint;
use num_traits::One;

use super::grassmannian::Perm;

struct Level {
    base: u32,
    /// Indices into the strong generating set of generators fixing all
    /// earlier base points.
    gens: Vec<usize>,
    /// `transversal[β] = u` with `base·u = β`, for `β` in the basic orbit.
    transversal: Vec<Option<Perm>>,
    inverses: Vec<Option<Perm>>,
    orbit: Vec<u32>,
}

impl Level {
    fn new(base: u32, n: usize) -> Level {
        Level {
            base,
            gens: Vec::new(),
            transversal: vec![None; n],
            inverses: vec![None; n],
            orbit: Vec::new(),
        }
    }

    fn rebuild(&mut self, strong: &[Perm]) {
        let n = self.transversal.len();
        self.transversal = vec![None; n];
        self.inverses = vec![None; n];
        let id = Perm::identity(n);
        self.inverses[self.base as usize] = Some(id.clone());
        self.transversal[self.base as usize] = Some(id);
        self.orbit = vec![self.base];
        let mut k = 0;
        while k < self.orbit.len() {
            let beta = self.orbit[k];
            for &g in &self.gens {
                let gamma = strong[g].apply(beta);
                if self.transversal[gamma as usize].is_none() {
                    let u = self.transversal[beta as usize]
                        .as_ref()
                        .expect("orbit point has a transversal element")
                        .then(&strong[g]);
                    self.inverses[gamma as usize] = Some(u.inverse());
                    self.transversal[gamma as usize] = Some(u);
                    self.orbit.push(gamma);
                }
            }
            k += 1;
        }
    }
}

/// Sift `g` through the levels from `start`; returns the residue and the
/// level at which sifting stopped (`levels.len()` when it went through).
fn strip(levels: &[Level], start: usize, mut g: Perm) -> (Perm, usize) {
    for (i, level) in levels.iter().enumerate().skip(start) {
        let beta = g.apply(level.base);
        match &level.inverses[beta as usize] {
            Some(inv) => g = g.then(inv),
            None => return (g, i),
        }
    }
    (g, levels.len())
}

fn first_moved(g: &Perm) -> Option<u32> {
    g.images()
        .iter()
        .enumerate()
        .find(|&(i, &j)| i as u32 != j)
        .map(|(i, _)| i as u32)
}

/// Order of the permutation group generated by `gens`, all on the same
/// number of points.
pub fn group_order(gens: &[Perm]) -> BigUint {
    let Some(n) = gens.first().map(Perm::len) else {
        return BigUint::one();
    };
    assert!(gens.iter().all(|g| g.len() == n), "generators act on different sets");
    let mut strong: Vec<Perm> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
    let mut levels: Vec<Level> = Vec::new();
    for g in &strong {
        if levels.iter().all(|l| g.apply(l.base) == l.base) {
            let b = first_moved(g).expect("non-identity generator");
            levels.push(Level::new(b, n));
        }
    }
    let bases: Vec<u32> = levels.iter().map(|l| l.base).collect();
    for (i, level) in levels.iter_mut().enumerate() {
        level.gens = (0..strong.len())
            .filter(|&g| bases[..i].iter().all(|&b| strong[g].apply(b) == b))
            .collect();
        level.rebuild(&strong);
    }

    let mut i = levels.len();
    while i > 0 {
        let lvl = i - 1;
        let mut extended = None;
        'search: for k in 0..levels[lvl].orbit.len() {
            let beta = levels[lvl].orbit[k];
            for gi in 0..levels[lvl].gens.len() {
                let s = &strong[levels[lvl].gens[gi]];
                let gamma = s.apply(beta);
                let level = &levels[lvl];
                let u = level.transversal[beta as usize].as_ref().expect("orbit point");
                let w = level.inverses[gamma as usize].as_ref().expect("orbit is closed");
                let h = u.then(s).then(w);
                if h.is_identity() {
                    continue;
                }
                let (y, j) = strip(&levels, lvl + 1, h);
                if j < levels.len() || !y.is_identity() {
                    extended = Some((y, j));
                    break 'search;
                }
            }
        }
        match extended {
            None => i -= 1,
            Some((y, j)) => {
                if j == levels.len() {
                    let b = first_moved(&y).expect("non-identity residue");
                    levels.push(Level::new(b, n));
                }
                strong.push(y);
                let idx = strong.len() - 1;
                for level in &mut levels[lvl + 1..=j] {
                    level.gens.push(idx);
                    level.rebuild(&strong);
                }
                i = j + 1;
            }
        }
    }
    levels
        .iter()
        .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
}
