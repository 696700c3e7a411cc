//! Dense linear systems over `K`.

use crate::error::Result;
use crate::kfield::KElem;

#[derive(Clone, Debug, PartialEq)]
pub enum Solution {
    Unique(Vec<KElem>),
    /// A particular solution and a basis of the kernel.
    Family(Vec<KElem>, Vec<Vec<KElem>>),
    Inconsistent,
}

/// Solve `a x = b` by Gaussian elimination. `a` is row-major.
pub fn solve(a: &[Vec<KElem>], b: &[KElem]) -> Result<Solution> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<KElem>> = a
        .iter()
        .zip(b)
        .map(|(r, v)| {
            let mut r = r.clone();
            r.push(v.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].inv()?;
        for c in col..=cols {
            m[row][c] = m[row][c].mul(&inv);
        }
        for r in 0..rows {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=cols {
                    let d = f.mul(&m[row][c]);
                    m[r][c] = m[r][c].add(&d);
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    if m[row..].iter().any(|r| !r[cols].is_zero()) {
        return Ok(Solution::Inconsistent);
    }
    let mut x = vec![KElem::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][cols].clone();
    }
    if pivots.len() == cols {
        return Ok(Solution::Unique(x));
    }
    let kernel = (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![KElem::zero(); cols];
            v[free] = KElem::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = m[r][free].clone();
            }
            v
        })
        .collect();
    Ok(Solution::Family(x, kernel))
}

/// Solve `f(x) = target` for an affine map `f: K^n -> K^m` known only by
/// evaluation.
pub fn solve_affine<F>(n: usize, target: &[KElem], f: F) -> Result<Solution>
where
    F: Fn(&[KElem]) -> Result<Vec<KElem>>,
{
    let zero = vec![KElem::zero(); n];
    let f0 = f(&zero)?;
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let mut e = zero.clone();
        e[j] = KElem::one();
        let fj = f(&e)?;
        cols.push(
            fj.iter()
                .zip(&f0)
                .map(|(p, q)| p.add(q))
                .collect::<Vec<_>>(),
        );
    }
    let a: Vec<Vec<KElem>> = (0..f0.len())
        .map(|i| cols.iter().map(|c| c[i].clone()).collect())
        .collect();
    let b: Vec<KElem> = target.iter().zip(&f0).map(|(t, z)| t.add(z)).collect();
    solve(&a, &b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(x: &KElem) -> KElem {
        x.clone()
    }

    #[test]
    fn unique_two_by_two() {
        let (s, t) = (KElem::s(), KElem::t());
        // s x + y = 1, x + t y = s
        let a = vec![vec![k(&s), KElem::one()], vec![KElem::one(), k(&t)]];
        let b = vec![KElem::one(), k(&s)];
        let Solution::Unique(x) = solve(&a, &b).unwrap() else {
            panic!()
        };
        assert_eq!(s.mul(&x[0]).add(&x[1]), KElem::one());
        assert_eq!(x[0].add(&t.mul(&x[1])), s);
    }

    #[test]
    fn kernel_and_inconsistency() {
        let s = KElem::s();
        let a = vec![vec![KElem::one(), k(&s)], vec![k(&s), s.square()]];
        match solve(&a, &[KElem::one(), k(&s)]).unwrap() {
            Solution::Family(_, ker) => assert_eq!(ker.len(), 1),
            other => panic!("{other:?}"),
        }
        assert_eq!(
            solve(&a, &[KElem::one(), KElem::one()]).unwrap(),
            Solution::Inconsistent
        );
    }
}
