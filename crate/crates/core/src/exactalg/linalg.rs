//! Gaussian elimination over a field whose elements implement
//! [`RingElem`] with every nonzero element invertible.

use super::RingElem;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<F: RingElem>(rows: &mut [Vec<F>]) -> Vec<usize> {
    let nrows = rows.len();
    if nrows == 0 {
        return Vec::new();
    }
    let ncols = rows[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(pr) = (r..nrows).find(|&i| !rows[i][c].is_zero_elem()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = rows[r][c]
            .try_inv()
            .expect("nonzero field element must be invertible");
        for x in rows[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..nrows {
            if i != r && !rows[i][c].is_zero_elem() {
                let f = rows[i][c].clone();
                for j in 0..ncols {
                    let sub = f.clone() * rows[r][j].clone();
                    rows[i][j] = rows[i][j].clone() - sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: RingElem>(rows: &[Vec<F>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Unique solution of the square system `m · x = rhs`, or `None` if `m` is
/// singular.
pub fn solve<F: RingElem>(m: &[Vec<F>], rhs: &[F]) -> Option<Vec<F>> {
    let n = m.len();
    let mut aug: Vec<Vec<F>> = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n].clone()).collect())
}

/// Basis of the right null space `{x : m · x = 0}`. `zero` supplies the ring
/// when `m` has no rows.
pub fn nullspace<F: RingElem>(m: &[Vec<F>], ncols: usize, zero: &F) -> Vec<Vec<F>> {
    let mut rows = m.to_vec();
    let pivots = rref(&mut rows);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![zero.zero_like(); ncols];
            v[f] = zero.one_like();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -rows[i][f].clone();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::modint::ModInt;
    use crate::exactalg::rational::{int, rat};

    #[test]
    fn solve_rational_system() {
        let m = vec![vec![int(2), int(1)], vec![int(1), int(3)]];
        let x = solve(&m, &[int(3), int(5)]).unwrap();
        assert_eq!(x, vec![rat(4, 5), rat(7, 5)]);
        let singular = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert!(solve(&singular, &[int(1), int(1)]).is_none());
    }

    #[test]
    fn nullspace_mod_p() {
        let f = |v| ModInt::new(v, 7);
        let m = vec![vec![f(1), f(2), f(3)], vec![f(2), f(4), f(6)]];
        let ns = nullspace(&m, 3, &f(0));
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let dot = m[0]
                .iter()
                .zip(v)
                .fold(f(0), |acc, (a, b)| acc + *a * *b);
            assert!(dot.is_zero_elem());
        }
        assert_eq!(rank(&m), 1);
    }
}
