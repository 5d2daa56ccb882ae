//! Dense exact linear algebra over a [`Field`]: rank and linear solving by
//! fraction-free-enough Gaussian elimination (all arithmetic is exact, so
//! plain elimination with pivoting by first nonzero entry suffices).

use crate::field::{Field, FieldElement};

/// Row-reduce `rows` in place and return the rank.
pub fn rank(_field: &Field, mut rows: Vec<Vec<FieldElement>>) -> usize {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0usize;
    for col in 0..ncols {
        let Some(pivot) = (rank..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].inv().expect("nonzero pivot");
        for r in rank + 1..nrows {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].mul(&inv);
            for c in col..ncols {
                let delta = factor.mul(&rows[rank][c]);
                rows[r][c] = rows[r][c].sub(&delta);
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

/// Solve `A x = b` where `columns` are the columns of A (each of equal
/// length).  Returns any solution, or `None` when the system is
/// inconsistent.
pub fn solve(
    field: &Field,
    columns: &[Vec<FieldElement>],
    b: &[FieldElement],
) -> Option<Vec<FieldElement>> {
    let ncols = columns.len();
    let nrows = b.len();
    // Augmented matrix [A | b], row major.
    let mut m: Vec<Vec<FieldElement>> = (0..nrows)
        .map(|r| {
            let mut row: Vec<FieldElement> =
                columns.iter().map(|c| c[r].clone()).collect();
            row.push(b[r].clone());
            row
        })
        .collect();
    let mut pivot_cols: Vec<usize> = vec![];
    let mut row = 0usize;
    for col in 0..ncols {
        let Some(p) = (row..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].inv().expect("nonzero pivot");
        for c in col..=ncols {
            m[row][c] = m[row][c].mul(&inv);
        }
        for r in 0..nrows {
            if r != row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..=ncols {
                    let delta = factor.mul(&m[row][c]);
                    m[r][c] = m[r][c].sub(&delta);
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == nrows {
            break;
        }
    }
    // Inconsistent iff some zero row has nonzero augment.
    for r in row..nrows {
        if !m[r][ncols].is_zero() {
            return None;
        }
    }
    let mut x = vec![field.zero(); ncols];
    for (r, &c) in pivot_cols.iter().enumerate() {
        x[c] = m[r][ncols].clone();
    }
    Some(x)
}

/// Solve `A x = b` for many right-hand sides with a single elimination of
/// the augmented matrix `[A | B]`.  Returns one solution per right-hand
/// side, or `None` when any of the systems is inconsistent.
pub fn solve_many(
    field: &Field,
    columns: &[Vec<FieldElement>],
    bs: &[Vec<FieldElement>],
) -> Option<Vec<Vec<FieldElement>>> {
    let ncols = columns.len();
    let nrows = columns.first().map_or(0, |c| c.len());
    let nb = bs.len();
    let mut m: Vec<Vec<FieldElement>> = (0..nrows)
        .map(|r| {
            let mut row: Vec<FieldElement> =
                columns.iter().map(|c| c[r].clone()).collect();
            row.extend(bs.iter().map(|b| b[r].clone()));
            row
        })
        .collect();
    let width = ncols + nb;
    let mut pivot_cols: Vec<usize> = vec![];
    let mut row = 0usize;
    for col in 0..ncols {
        let Some(p) = (row..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].inv().expect("nonzero pivot");
        for c in col..width {
            m[row][c] = m[row][c].mul(&inv);
        }
        for r in 0..nrows {
            if r != row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..width {
                    let delta = factor.mul(&m[row][c]);
                    m[r][c] = m[r][c].sub(&delta);
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == nrows {
            break;
        }
    }
    // Inconsistent iff some zero row has a nonzero augmented entry.
    for r in row..nrows {
        if (ncols..width).any(|c| !m[r][c].is_zero()) {
            return None;
        }
    }
    let solutions = (0..nb)
        .map(|k| {
            let mut x = vec![field.zero(); ncols];
            for (r, &c) in pivot_cols.iter().enumerate() {
                x[c] = m[r][ncols + k].clone();
            }
            x
        })
        .collect();
    Some(solutions)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_solve_over_gf5() {
        let f = Field::gf(5).unwrap();
        let e = |n: i64| f.from_int(n);
        let rows = vec![
            vec![e(1), e(2), e(3)],
            vec![e(2), e(4), e(1)],
            vec![e(3), e(6), e(4)],
        ];
        // Mod 5 every row is a multiple of the first ([2,4,1] ≡ 2·[1,2,3]).
        assert_eq!(rank(&f, rows.clone()), 1);
        // Over ℚ the same matrix has rank 2 (row 3 = row 1 + row 2).
        let qq = Field::rationals();
        let q = |n: i64| qq.from_int(n);
        let qrows = vec![
            vec![q(1), q(2), q(3)],
            vec![q(2), q(4), q(1)],
            vec![q(3), q(6), q(4)],
        ];
        assert_eq!(rank(&qq, qrows), 2);

        let columns = vec![vec![e(1), e(0)], vec![e(1), e(1)]];
        let x = solve(&f, &columns, &[e(3), e(2)]).unwrap();
        assert_eq!(x, vec![e(1), e(2)]);
        // Inconsistent system.
        let columns = vec![vec![e(1), e(2)]];
        assert!(solve(&f, &columns, &[e(1), e(1)]).is_none());
    }

    #[test]
    fn solve_many_matches_solve() {
        let f = Field::gf(7).unwrap();
        let e = |n: i64| f.from_int(n);
        let columns = vec![vec![e(1), e(0), e(2)], vec![e(1), e(1), e(0)]];
        let bs = vec![vec![e(3), e(2), e(2)], vec![e(2), e(1), e(2)]];
        let many = solve_many(&f, &columns, &bs).unwrap();
        for (b, x) in bs.iter().zip(&many) {
            assert_eq!(solve(&f, &columns, b).unwrap(), *x);
        }
        // One inconsistent right-hand side poisons the batch.
        let bad = vec![vec![e(1), e(1), e(1)]];
        assert!(solve_many(&f, &columns, &bad).is_none());
    }

    #[test]
    fn solve_over_rationals() {
        let f = Field::rationals();
        let e = |n: i64| f.from_int(n);
        let columns = vec![vec![e(2), e(1)], vec![e(1), e(1)]];
        let x = solve(&f, &columns, &[e(1), e(1)]).unwrap();
        assert_eq!(x, vec![e(0), e(1)]);
    }
}
