//! Smith normal form over the integers, exact arithmetic, pivot chosen by
//! least absolute value.  Good enough for desk-scale boundary matrices.

/// Diagonal of the Smith normal form: nonzero entries `d_1 | d_2 | ...`,
/// all positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub diagonal: Vec<i128>,
    pub rows: usize,
    pub cols: usize,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }

    /// Entries > 1, i.e. the torsion coefficients of the cokernel.
    pub fn torsion(&self) -> Vec<i128> {
        self.diagonal.iter().copied().filter(|&d| d > 1).collect()
    }
}

fn min_abs_pivot(m: &[Vec<i128>], k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, i128)> = None;
    for r in k..m.len() {
        for c in k..m[r].len() {
            let v = m[r][c].abs();
            if v != 0 && best.map_or(true, |(_, _, b)| v < b) {
                best = Some((r, c, v));
            }
        }
    }
    best.map(|(r, c, _)| (r, c))
}

/// Reduces `m` to Smith normal form and returns the invariant factors.
pub fn smith_normal_form(mut m: Vec<Vec<i128>>) -> SmithForm {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    debug_assert!(m.iter().all(|r| r.len() == cols));
    let mut diagonal = Vec::new();
    let steps = rows.min(cols);
    'outer: for k in 0..steps {
        let Some((pr, pc)) = min_abs_pivot(&m, k) else {
            break 'outer;
        };
        m.swap(k, pr);
        for row in m.iter_mut() {
            row.swap(k, pc);
        }
        loop {
            // clear column k by euclidean row steps, re-pivoting as needed
            let mut dirty = false;
            for r in k + 1..rows {
                if m[r][k] != 0 {
                    let q = m[r][k].div_euclid(m[k][k]);
                    if q != 0 {
                        for c in k..cols {
                            m[r][c] -= q * m[k][c];
                        }
                    }
                    if m[r][k] != 0 {
                        m.swap(k, r); // remainder is smaller, make it the pivot
                        dirty = true;
                    }
                }
            }
            for c in k + 1..cols {
                if m[k][c] != 0 {
                    let q = m[k][c].div_euclid(m[k][k]);
                    if q != 0 {
                        for row in m.iter_mut().skip(k) {
                            row[c] -= q * row[k];
                        }
                    }
                    if m[k][c] != 0 {
                        for row in m.iter_mut() {
                            row.swap(k, c);
                        }
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue;
            }
            // divisibility: pivot must divide the remaining submatrix
            let p = m[k][k];
            let offender = (k + 1..rows)
                .flat_map(|r| (k + 1..cols).map(move |c| (r, c)))
                .find(|&(r, c)| m[r][c] % p != 0);
            match offender {
                Some((r, _)) => {
                    for c in k..cols {
                        let v = m[r][c];
                        m[k][c] += v;
                    }
                }
                None => break,
            }
        }
        if m[k][k] < 0 {
            for row in m.iter_mut() {
                row[k] = -row[k];
            }
        }
        diagonal.push(m[k][k]);
    }
    SmithForm { diagonal, rows, cols }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::SplitMix64;

    #[test]
    fn known_4x4() {
        let m = vec![
            vec![-6, 111, -36, 6],
            vec![5, -672, 210, 74],
            vec![0, -255, 81, 24],
            vec![-7, 255, -81, -10],
        ];
        assert_eq!(smith_normal_form(m).diagonal, vec![1, 3, 21]);
    }

    #[test]
    fn klein_boundary_matrix() {
        // rows a,b,c; columns L,U: dL = a + b - c, dU = a - b + c
        let m = vec![vec![1, 1], vec![1, -1], vec![-1, 1]];
        let snf = smith_normal_form(m);
        assert_eq!(snf.diagonal, vec![1, 2]);
        assert_eq!(snf.torsion(), vec![2]);
    }

    #[test]
    fn divisibility_chain_holds() {
        let m = vec![vec![2, 0, 0], vec![0, 6, 0], vec![0, 0, 4]];
        let snf = smith_normal_form(m);
        for w in snf.diagonal.windows(2) {
            assert_eq!(w[1] % w[0], 0, "{:?}", snf.diagonal);
        }
        assert_eq!(snf.diagonal, vec![2, 2, 12]);
    }

    #[test]
    fn zero_and_empty_matrices() {
        assert_eq!(smith_normal_form(vec![]).diagonal, Vec::<i128>::new());
        assert_eq!(smith_normal_form(vec![vec![0, 0], vec![0, 0]]).diagonal, Vec::<i128>::new());
    }

    /// Independent rank oracle: fraction-free Gaussian elimination.
    fn rank_by_elimination(mut m: Vec<Vec<i128>>) -> usize {
        let rows = m.len();
        let cols = m.first().map_or(0, Vec::len);
        let mut rank = 0;
        for c in 0..cols {
            let Some(p) = (rank..rows).find(|&r| m[r][c] != 0) else { continue };
            m.swap(rank, p);
            for r in 0..rows {
                if r != rank && m[r][c] != 0 {
                    let (a, b) = (m[rank][c], m[r][c]);
                    for k in 0..cols {
                        m[r][k] = m[r][k] * a - m[rank][k] * b;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn rank_matches_elimination_oracle_and_transpose() {
        let mut rng = SplitMix64::new(0xabc);
        for _ in 0..80 {
            let rows = 1 + rng.below(5);
            let cols = 1 + rng.below(5);
            let m: Vec<Vec<i128>> = (0..rows)
                .map(|_| (0..cols).map(|_| rng.below(11) as i128 - 5).collect())
                .collect();
            let snf = smith_normal_form(m.clone());
            assert_eq!(snf.rank(), rank_by_elimination(m.clone()));
            let t: Vec<Vec<i128>> =
                (0..cols).map(|c| (0..rows).map(|r| m[r][c]).collect()).collect();
            assert_eq!(smith_normal_form(t).diagonal, snf.diagonal, "transpose invariance");
            for w in snf.diagonal.windows(2) {
                assert_eq!(w[1] % w[0], 0);
            }
        }
    }

    #[test]
    fn invariant_under_row_column_shuffles() {
        let base = vec![
            vec![4, -2, 0, 7],
            vec![2, 2, 6, -3],
            vec![0, 8, 12, 1],
        ];
        let expected = smith_normal_form(base.clone()).diagonal;
        let mut rng = SplitMix64::new(0xfeed);
        for _ in 0..50 {
            let mut m = base.clone();
            // random row and column permutations
            for r in (1..m.len()).rev() {
                let s = rng.below(r + 1);
                m.swap(r, s);
            }
            for c in (1..m[0].len()).rev() {
                let s = rng.below(c + 1);
                for row in m.iter_mut() {
                    row.swap(c, s);
                }
            }
            assert_eq!(smith_normal_form(m).diagonal, expected);
        }
    }
}
