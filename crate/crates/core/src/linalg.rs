//! Exact determinants over the rationals.

use num_traits::{One, Zero};

use crate::Rational;

/// Determinant of a square matrix given row-major. The empty matrix has
/// determinant 1.
pub fn det(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    debug_assert!(m.iter().all(|row| row.len() == n));
    let mut acc = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            acc = -acc;
        }
        let p = m[col][col].clone();
        acc *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &p;
            for c in col..n {
                let delta = &factor * &m[col][c];
                m[r][c] -= delta;
            }
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn small_determinants() {
        assert_eq!(det(vec![]), int(1));
        assert_eq!(det(vec![vec![int(3)]]), int(3));
        assert_eq!(det(vec![vec![int(1), int(1)], vec![int(1), int(1)]]), int(0));
        assert_eq!(
            det(vec![vec![int(0), int(1)], vec![int(1), int(1)]]),
            int(-1)
        );
        let m = vec![
            vec![int(2), int(0), int(1)],
            vec![int(1), ratio(1, 2), int(0)],
            vec![int(0), int(3), int(4)],
        ];
        // 2*(2-0) - 0 + 1*(3-0) = 7
        assert_eq!(det(m), int(7));
    }
}
