//! Slow-but-trustworthy resultants via Sylvester determinants.
//!
//! The fast resultant in `poly::resultant` runs a fraction-free
//! pseudo-remainder sequence; this module recomputes the same quantity from
//! first principles so the two routes can be compared in the test suites:
//!
//! - [`sylvester_matrix`] lays out the full (m+n) × (m+n) coefficient matrix
//!   of two polynomials with respect to one variable, entries being
//!   polynomials in the remaining variables;
//! - [`sylvester_resultant`] takes its determinant — by exact Gaussian
//!   elimination when every entry is a field constant, by memoized cofactor
//!   expansion when entries are symbolic — and applies the same edge
//!   conventions as the fast routine (a zero argument gives 0, two constants
//!   give 1, one constant gives the power rule).
//!
//! The cofactor expansion is exponential in the matrix size, which is
//! acceptable here: the oracle only ever sees desk-scale symbolic inputs.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::{Coef, Field};
use crate::poly::MultiPoly;

/// Sylvester matrix of `f` and `g` with respect to the variable at `var`.
///
/// With `m = deg_var f ≥ 1` and `n = deg_var g ≥ 1`, the matrix consists of
/// `n` rows of `f`-coefficients (highest power first, shifted right one step
/// per row) followed by `m` rows of `g`-coefficients laid out the same way.
pub fn sylvester_matrix(f: &MultiPoly, g: &MultiPoly, var: usize) -> Vec<Vec<MultiPoly>> {
    let field = f.field().clone();
    let vars = f.vars();
    let fc = f.coeffs_wrt(var);
    let gc = g.coeffs_wrt(var);
    let m = fc.len() - 1;
    let n = gc.len() - 1;
    let size = m + n;
    let mut rows = vec![vec![MultiPoly::zero(&field, &vars); size]; size];
    for i in 0..n {
        for (k, c) in fc.iter().rev().enumerate() {
            rows[i][i + k] = c.clone();
        }
    }
    for j in 0..m {
        for (k, c) in gc.iter().rev().enumerate() {
            rows[n + j][j + k] = c.clone();
        }
    }
    rows
}

/// Determinant of a matrix of field constants by exact Gaussian elimination
/// with partial pivoting; used whenever no symbolic entries are present.
fn det_constant(rows: &[Vec<MultiPoly>], field: &Field) -> Coef {
    let n = rows.len();
    let mut mat: Vec<Vec<Coef>> = rows
        .iter()
        .map(|row| {
            row.iter()
                .map(|e| e.constant_value().expect("caller checked constancy"))
                .collect()
        })
        .collect();
    let mut det = field.one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !field.is_zero(&mat[r][col])) else {
            return field.zero();
        };
        if pivot != col {
            mat.swap(pivot, col);
            det = field.neg(&det);
        }
        det = field.mul(&det, &mat[col][col]);
        let inv = field.inv(&mat[col][col]).expect("pivot is nonzero");
        let pivot_row = mat[col].clone();
        for row in mat.iter_mut().skip(col + 1) {
            if field.is_zero(&row[col]) {
                continue;
            }
            let factor = field.mul(&row[col], &inv);
            for (c, pivot_entry) in pivot_row.iter().enumerate().skip(col) {
                let s = field.mul(&factor, pivot_entry);
                row[c] = field.sub(&row[c], &s);
            }
        }
    }
    det
}

/// Determinant by cofactor expansion along successive rows, memoized on the
/// bitmask of columns still in play (the row index is implied by how many
/// columns remain).
fn det_memo(
    rows: &[Vec<MultiPoly>],
    mask: u64,
    memo: &mut HashMap<u64, MultiPoly>,
    field: &Field,
    vars: &[&str],
) -> MultiPoly {
    if mask == 0 {
        return MultiPoly::one(field, vars);
    }
    if let Some(v) = memo.get(&mask) {
        return v.clone();
    }
    let row = rows.len() - mask.count_ones() as usize;
    let mut acc = MultiPoly::zero(field, vars);
    let mut negative = false;
    let mut bits = mask;
    while bits != 0 {
        let col = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let entry = &rows[row][col];
        if !entry.is_zero() {
            let minor = det_memo(rows, mask & !(1u64 << col), memo, field, vars);
            let term = entry.mul(&minor);
            acc = if negative { acc.sub(&term) } else { acc.add(&term) };
        }
        negative = !negative;
    }
    memo.insert(mask, acc.clone());
    acc
}

/// Resultant of `f` and `g` with respect to `var`, straight from the
/// Sylvester determinant.
///
/// Edge conventions match the pseudo-remainder-sequence implementation so the
/// two can be compared verbatim: a zero argument yields 0, two polynomials
/// constant in `var` yield 1, and a single constant argument `c` yields
/// `c^(deg other)`.
pub fn sylvester_resultant(f: &MultiPoly, g: &MultiPoly, var: usize) -> Result<MultiPoly> {
    let field = f.field().clone();
    let vars = f.vars();
    if f.is_zero() || g.is_zero() {
        return Ok(MultiPoly::zero(&field, &vars));
    }
    let df = f.degree_in(var);
    let dg = g.degree_in(var);
    if df == 0 && dg == 0 {
        return Ok(MultiPoly::one(&field, &vars));
    }
    if df == 0 {
        return Ok(f.pow(dg));
    }
    if dg == 0 {
        return Ok(g.pow(df));
    }
    let rows = sylvester_matrix(f, g, var);
    if rows.len() >= 64 {
        return Err(Error::DegenerateResultant);
    }
    if rows.iter().all(|row| row.iter().all(|e| e.is_constant())) {
        let det = det_constant(&rows, &field);
        return Ok(MultiPoly::constant(&field, &vars, det));
    }
    let full = (1u64 << rows.len()) - 1;
    let mut memo = HashMap::new();
    Ok(det_memo(&rows, full, &mut memo, &field, &vars))
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::field::Field;
    use crate::poly::resultant::resultant;
    use crate::poly::MultiPoly;

    #[test]
    fn matrix_shape_for_the_cusp_pair() {
        let q = Field::rationals();
        let vars = ["t", "x", "y"];
        let f = MultiPoly::parse(&q, &vars, "t^2 - x").unwrap();
        let g = MultiPoly::parse(&q, &vars, "t^3 - y").unwrap();
        let rows = sylvester_matrix(&f, &g, 0);
        assert_eq!(rows.len(), 5);
        assert!(rows.iter().all(|r| r.len() == 5));
        // first f-row: 1, 0, -x, 0, 0
        assert_eq!(rows[0][0], MultiPoly::one(&q, &vars));
        assert_eq!(rows[0][2], MultiPoly::parse(&q, &vars, "-x").unwrap());
        assert!(rows[0][1].is_zero() && rows[0][3].is_zero() && rows[0][4].is_zero());
        // first g-row starts after three f-rows: 1, 0, 0, -y, 0
        assert_eq!(rows[3][0], MultiPoly::one(&q, &vars));
        assert_eq!(rows[3][3], MultiPoly::parse(&q, &vars, "-y").unwrap());
    }

    #[test]
    fn determinant_agrees_with_the_fast_route_on_the_cusp() {
        let q = Field::rationals();
        let vars = ["t", "x", "y"];
        let f = MultiPoly::parse(&q, &vars, "t^2 - x").unwrap();
        let g = MultiPoly::parse(&q, &vars, "t^3 - y").unwrap();
        let slow = sylvester_resultant(&f, &g, 0).unwrap();
        let fast = resultant(&f, &g, 0).unwrap();
        assert_eq!(slow, fast);
        let expect = MultiPoly::parse(&q, &vars, "y^2 - x^3").unwrap();
        assert!(slow == expect || slow == expect.neg(), "got {slow}");
    }

    #[test]
    fn linear_difference_and_numeric_value() {
        let q = Field::rationals();
        let vars = ["t", "a", "b"];
        let f = MultiPoly::parse(&q, &vars, "t - a").unwrap();
        let g = MultiPoly::parse(&q, &vars, "t - b").unwrap();
        let r = sylvester_resultant(&f, &g, 0).unwrap();
        assert_eq!(r, MultiPoly::parse(&q, &vars, "a - b").unwrap());

        let uv = ["x"];
        let f = MultiPoly::parse(&q, &uv, "x^2 + 1").unwrap();
        let g = MultiPoly::parse(&q, &uv, "x + 3").unwrap();
        let r = sylvester_resultant(&f, &g, 0).unwrap();
        assert_eq!(r, MultiPoly::parse(&q, &uv, "10").unwrap());
    }

    #[test]
    fn edge_conventions_mirror_the_fast_route() {
        let q = Field::rationals();
        let vars = ["t", "x"];
        let zero = MultiPoly::zero(&q, &vars);
        let c = MultiPoly::parse(&q, &vars, "x + 2").unwrap();
        let f = MultiPoly::parse(&q, &vars, "t^2 + x").unwrap();
        for (a, b) in [(&zero, &f), (&f, &zero), (&zero, &zero)] {
            assert!(sylvester_resultant(a, b, 0).unwrap().is_zero());
            assert!(resultant(a, b, 0).unwrap().is_zero());
        }
        // both constant in t
        let one = MultiPoly::one(&q, &vars);
        assert_eq!(sylvester_resultant(&c, &c, 0).unwrap(), one);
        // single constant: power rule, matching the fast route
        assert_eq!(sylvester_resultant(&c, &f, 0).unwrap(), c.pow(2));
        assert_eq!(sylvester_resultant(&c, &f, 0).unwrap(), resultant(&c, &f, 0).unwrap());
        assert_eq!(sylvester_resultant(&f, &c, 0).unwrap(), resultant(&f, &c, 0).unwrap());
    }

    #[test]
    fn shared_factor_kills_the_determinant() {
        let f2 = Field::finite(2, 1).unwrap();
        let vars = ["t", "x"];
        let common = MultiPoly::parse(&f2, &vars, "t + x").unwrap();
        let f = common.mul(&MultiPoly::parse(&f2, &vars, "t^2 + t + 1").unwrap());
        let g = common.mul(&MultiPoly::parse(&f2, &vars, "t + x^2").unwrap());
        assert!(sylvester_resultant(&f, &g, 0).unwrap().is_zero());
    }

    #[test]
    fn exhaustive_tiny_sweep_over_f2() {
        // every pair of univariate polynomials of degree <= 2 over F_2
        let f2 = Field::finite(2, 1).unwrap();
        let vars = ["t"];
        let polys: Vec<MultiPoly> = (0u32..8)
            .map(|bits| {
                MultiPoly::from_terms(
                    &f2,
                    &vars,
                    (0..3)
                        .filter(|i| bits >> i & 1 == 1)
                        .map(|i| (vec![i as u32], f2.one()))
                        .collect(),
                )
            })
            .collect();
        for f in &polys {
            for g in &polys {
                let slow = sylvester_resultant(f, g, 0).unwrap();
                let fast = resultant(f, g, 0).unwrap();
                assert_eq!(slow, fast, "mismatch for {f} vs {g}");
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn prs_equals_sylvester_over_the_rationals(
            tf in proptest::collection::vec((0u32..4, 0u32..3, -3i64..4), 1..5),
            tg in proptest::collection::vec((0u32..4, 0u32..3, -3i64..4), 1..5),
        ) {
            let q = Field::rationals();
            let vars = ["t", "x"];
            let build = |ts: &[(u32, u32, i64)]| {
                MultiPoly::from_terms(
                    &q,
                    &vars,
                    ts.iter().map(|&(i, j, c)| (vec![i, j], q.from_i64(c))).collect(),
                )
            };
            let f = build(&tf);
            let g = build(&tg);
            let slow = sylvester_resultant(&f, &g, 0).unwrap();
            let fast = resultant(&f, &g, 0).unwrap();
            prop_assert_eq!(slow, fast);
        }
    }
}
