//! Log canonical thresholds and discrepancy ledgers.
//!
//! The module provides:
//!
//! * [`lct_plane_germ`] — the log canonical threshold of a plane curve germ,
//!   read off an embedded resolution tree as the minimum of `(k+1)/a` over
//!   its exceptional divisors;
//! * [`xg_ledger`] and [`lct_xg`] — the discrepancy ledger of the threefold
//!   blow-up sequence attached to a cone-type surface singularity whose
//!   tangent cone is a plane curve: first the origin of affine 3-space, then
//!   the chain of infinitely near points of the curve's double point, with
//!   the point-blow-up recurrences in ambient dimension 3;
//! * [`char0_max_am`] — the characteristic-zero ceiling `3d(d−1)+1` for the
//!   index of an A-type double point on a curve of even degree `2d`;
//! * [`lifting_verdict`] — the one-sided obstruction test for lifting an
//!   even-index double point to characteristic zero with its discrepancies
//!   preserved.
//!
//! All thresholds are exact rationals in lowest terms; nothing here is
//! approximate.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::resolve::{BlowupTree, ResolveMode};

/// `(k+1)/a` in lowest terms.
fn candidate(a: u64, k: u64) -> BigRational {
    BigRational::new(BigInt::from(k + 1), BigInt::from(a))
}

// ---------------------------------------------------------------------------
// plane-germ thresholds
// ---------------------------------------------------------------------------

/// Log canonical threshold of a plane germ, with a flag for the degenerate
/// smooth case (empty tree), where the value 1 is returned by convention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneLct {
    pub value: BigRational,
    pub smooth: bool,
}

/// Minimum of `(k_i + 1)/a_i` over the divisors of an embedded resolution.
pub fn lct_plane_germ(tree: &BlowupTree) -> Result<PlaneLct> {
    if tree.mode() != ResolveMode::Embedded {
        return Err(Error::NeedEmbeddedTree);
    }
    let mut best: Option<BigRational> = None;
    for n in tree.nodes() {
        let c = candidate(n.a, n.k);
        best = Some(match best {
            None => c,
            Some(b) => b.min(c),
        });
    }
    match best {
        None => Ok(PlaneLct {
            value: BigRational::from_integer(BigInt::from(1)),
            smooth: true,
        }),
        Some(value) => Ok(PlaneLct {
            value,
            smooth: false,
        }),
    }
}

// ---------------------------------------------------------------------------
// threefold ledgers
// ---------------------------------------------------------------------------

/// One exceptional divisor of a blow-up sequence, with its multiplicity `a`
/// along the total transform of the ideal, its discrepancy `k`, and the
/// threshold candidate `(k+1)/a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorLedgerEntry {
    pub id: usize,
    pub a: u64,
    pub k: u64,
    /// 2 for plane-curve divisors, 3 for the threefold sequence.
    pub ambient_dim: u32,
    pub lct_candidate: BigRational,
}

/// Discrepancy ledger of the threefold sequence above a cone-type surface
/// `{f_d(x, y, z) + (higher order) = 0}` of multiplicity `degree` whose
/// tangent cone is a plane curve with one double point: blow up the origin
/// of 3-space (entry 0), then follow the curve's infinitely near points.
///
/// Entry 0 carries `(a, k) = (degree, 2)`.  Each subsequent center is a point
/// of the strict surface lying on the strict plane of the first exceptional
/// divisor and on the divisors recorded in the curve tree, so
/// `k = 2 + Σ k_j` and `a = m + Σ a_j` over those divisors, where `m` is the
/// curve-tree multiplicity at the center.
pub fn xg_ledger(degree: u64, tree: &BlowupTree) -> Result<Vec<DivisorLedgerEntry>> {
    if degree < 3 {
        return Err(Error::BadDegree(format!(
            "cone multiplicity {degree} is below 3; the sequence needs a singular cone"
        )));
    }
    if !tree.verify_ledger() {
        return Err(Error::CertificateFailure(
            "blow-up tree failed its ledger re-check".into(),
        ));
    }
    let mut entries = Vec::with_capacity(tree.nodes().len() + 1);
    entries.push(DivisorLedgerEntry {
        id: 0,
        a: degree,
        k: 2,
        ambient_dim: 3,
        lct_candidate: candidate(degree, 2),
    });
    for node in tree.nodes() {
        // divisors through the center: the strict plane of entry 0, plus the
        // threefold divisors matching the curve-level incidences
        let mut a = node.multiplicity + entries[0].a;
        let mut k = 2 + entries[0].k;
        for &d in &node.divisors_through {
            a += entries[d + 1].a;
            k += entries[d + 1].k;
        }
        entries.push(DivisorLedgerEntry {
            id: node.id + 1,
            a,
            k,
            ambient_dim: 3,
            lct_candidate: candidate(a, k),
        });
    }
    Ok(entries)
}

/// The threshold from a threefold ledger, with the index attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XgLct {
    pub value: BigRational,
    pub argmin: usize,
}

/// Minimum threshold candidate over a (nonempty) ledger, reporting where the
/// minimum is attained rather than assuming it is the first entry.
pub fn lct_xg(ledger: &[DivisorLedgerEntry]) -> XgLct {
    assert!(!ledger.is_empty(), "ledger has at least the origin entry");
    let mut best = 0usize;
    for (i, e) in ledger.iter().enumerate().skip(1) {
        if e.lct_candidate < ledger[best].lct_candidate {
            best = i;
        }
    }
    XgLct {
        value: ledger[best].lct_candidate.clone(),
        argmin: best,
    }
}

// ---------------------------------------------------------------------------
// characteristic-zero bound and lifting obstruction
// ---------------------------------------------------------------------------

/// Largest index `m` an irreducible plane curve of even degree `2d` can
/// realize as an A_m double point in characteristic zero: `3d(d−1)+1`.
pub fn char0_max_am(degree: u64) -> Result<u64> {
    if degree < 2 || !degree.is_multiple_of(2) {
        return Err(Error::BadDegree(format!(
            "the index ceiling is stated for even degrees; got {degree}"
        )));
    }
    let d = degree / 2;
    Ok(3 * d * (d - 1) + 1)
}

/// Outcome of the one-sided lifting test: a definite obstruction, or the
/// absence of one (which is not a liftability proof).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Obstructed,
    NotObstructed,
}

/// Report of [`lifting_verdict`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftingVerdict {
    pub curve: String,
    pub degree: u64,
    pub m: u64,
    pub char0_max: u64,
    pub verdict: Verdict,
    pub reason: String,
}

/// Test whether a degree-`degree` curve with an even-index A_m double point
/// can lift to characteristic zero with its discrepancies preserved.  Such a
/// lift must carry an A_m or A_{m−1} singularity, so the test compares
/// `m − 1` against the characteristic-zero ceiling: exceeding it is a proof
/// of non-liftability, staying within it only means "not obstructed here".
pub fn lifting_verdict(curve: &str, degree: u64, m: u64) -> Result<LiftingVerdict> {
    if m == 0 || !m.is_multiple_of(2) {
        return Err(Error::BadDegree(format!(
            "the lifting dichotomy needs an even index; got m = {m}"
        )));
    }
    let char0_max = char0_max_am(degree)?;
    let needed = m - 1;
    let (verdict, reason) = if needed <= char0_max {
        (
            Verdict::NotObstructed,
            format!(
                "a characteristic-zero curve of degree {degree} may reach index {needed} \
                 (ceiling {char0_max}); no obstruction from the degree bound"
            ),
        )
    } else {
        (
            Verdict::Obstructed,
            format!(
                "a lift would need index {needed} or {m} on a degree-{degree} curve, \
                 but characteristic zero caps the index at {char0_max}"
            ),
        )
    };
    Ok(LiftingVerdict {
        curve: curve.to_string(),
        degree,
        m,
        char0_max,
        verdict,
        reason,
    })
}

// ---------------------------------------------------------------------------
// tests
// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{c_q2, implicitize, singular_points, DEFAULT_K_MAX};
    use crate::field::Field;
    use crate::poly::MultiPoly;
    use crate::resolve::{classify, resolution_tree, CurveGerm, GermKind};

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn germ(field: &Field, s: &str) -> CurveGerm {
        let f = MultiPoly::parse(field, &["x", "z"], s).unwrap();
        CurveGerm::new(&f, None).unwrap()
    }

    fn family_germ(n: u32) -> CurveGerm {
        let curve = c_q2(n).unwrap();
        let imp = implicitize(&curve).unwrap();
        let locus = singular_points(&imp.curve, DEFAULT_K_MAX).unwrap();
        CurveGerm::from_curve_point(&imp.curve, &locus.points[0]).unwrap()
    }

    #[test]
    fn simple_node_and_smooth_conventions() {
        let f5 = Field::finite(5, 1).unwrap();
        let node = resolution_tree(&germ(&f5, "z^2 + x^2 + x^3"), ResolveMode::Embedded).unwrap();
        let l = lct_plane_germ(&node).unwrap();
        assert_eq!(l.value, rat(1, 1));
        assert!(!l.smooth);

        let smooth = resolution_tree(&germ(&f5, "z + x^2"), ResolveMode::Embedded).unwrap();
        let l = lct_plane_germ(&smooth).unwrap();
        assert_eq!(l.value, rat(1, 1));
        assert!(l.smooth);

        let norm = resolution_tree(&germ(&f5, "z^2 + x^3"), ResolveMode::Normalization).unwrap();
        assert!(matches!(lct_plane_germ(&norm), Err(Error::NeedEmbeddedTree)));
    }

    #[test]
    fn cusp_threshold_from_ledger() {
        let q = Field::rationals();
        let tree = resolution_tree(&germ(&q, "z^2 + x^3"), ResolveMode::Embedded).unwrap();
        assert_eq!(lct_plane_germ(&tree).unwrap().value, rat(5, 6));
    }

    #[test]
    fn family_germ_thresholds() {
        // index 6 at degree 4, index 20 at degree 6: threshold 1/2 + 1/(m+1)
        let t1 = resolution_tree(&family_germ(1), ResolveMode::Embedded).unwrap();
        assert_eq!(lct_plane_germ(&t1).unwrap().value, rat(9, 14));

        let t2 = resolution_tree(&family_germ(2), ResolveMode::Embedded).unwrap();
        assert_eq!(lct_plane_germ(&t2).unwrap().value, rat(23, 42));
        assert_eq!(rat(23, 42), rat(1, 2) + rat(1, 21));
    }

    #[test]
    fn threshold_formula_sweep_char_zero_and_two() {
        // A_m germs: z^2 - x^(m+1) over the rationals; over F_2 the models
        // z^2 + x^(m+1) (m even) and z^2 + z x^((m+1)/2) (m odd)
        let q = Field::rationals();
        let f2 = Field::finite(2, 1).unwrap();
        let mut last: Option<BigRational> = None;
        for m in 1u64..=200 {
            let expect = rat(1, 2) + BigRational::new(BigInt::from(1), BigInt::from(m + 1));

            let g0 = germ(&q, &format!("z^2 - x^{}", m + 1));
            let t0 = resolution_tree(&g0, ResolveMode::Embedded).unwrap();
            let l0 = lct_plane_germ(&t0).unwrap().value;
            assert_eq!(l0, expect, "characteristic 0, m = {m}");

            let g2 = if m.is_multiple_of(2) {
                germ(&f2, &format!("z^2 + x^{}", m + 1))
            } else {
                germ(&f2, &format!("z^2 + z*x^{}", m.div_ceil(2)))
            };
            let t2 = resolution_tree(&g2, ResolveMode::Embedded).unwrap();
            let l2 = lct_plane_germ(&t2).unwrap().value;
            assert_eq!(l2, expect, "characteristic 2, m = {m}");

            // thresholds decrease strictly in the index and stay in (1/2, 1]
            if let Some(prev) = last {
                assert!(l0 < prev, "not strictly decreasing at m = {m}");
            }
            assert!(l0 > rat(0, 1) && l0 <= rat(1, 1));
            last = Some(l0);
        }
    }

    #[test]
    fn tangent_pair_family_index_formula() {
        // (z - x^d)^2 - z^(2d) has index 2d^2 - 1 = (degree^2)/2 - 1
        let f7 = Field::finite(7, 1).unwrap();
        for d in 2u32..=6 {
            let s = format!("(z - x^{d})^2 - z^{}", 2 * d);
            let f = MultiPoly::parse(&f7, &["x", "z"], &s).unwrap();
            let st = classify(&CurveGerm::new(&f, None).unwrap()).unwrap();
            assert_eq!(st.kind, GermKind::Am);
            let deg = 2 * d as u64;
            assert_eq!(st.m, 2 * (d as u64) * (d as u64) - 1);
            assert_eq!(st.m, deg * deg / 2 - 1);
            assert!(st.tree.verify_ledger());
        }
    }

    #[test]
    fn threefold_ledger_entries_and_minimum() {
        // degree 6 cone over the index-20 curve germ: entry 0 is (6, 2) with
        // candidate 1/2, and the whole ledger's minimum sits there
        let tree = resolution_tree(&family_germ(2), ResolveMode::Normalization).unwrap();
        let ledger = xg_ledger(6, &tree).unwrap();
        assert_eq!(ledger.len(), 11);
        assert_eq!((ledger[0].a, ledger[0].k), (6, 2));
        assert_eq!(ledger[0].lct_candidate, rat(1, 2));
        // free chain: a grows by 6 + 2, k by 2 + 2 each step
        for (i, e) in ledger.iter().enumerate().skip(1) {
            assert_eq!(e.a, 8 * i as u64);
            assert_eq!(e.k, 4 * i as u64);
            assert!(e.a >= 1 && e.k >= 1);
            assert!(e.lct_candidate > rat(1, 2));
        }
        let x = lct_xg(&ledger);
        assert_eq!(x.value, rat(1, 2));
        assert_eq!(x.argmin, 0);
    }

    #[test]
    fn threefold_threshold_depends_on_cone_degree() {
        // degree 10 cone over the index-72 germ: threshold 3/10, still at the
        // first divisor
        let tree = resolution_tree(&family_germ(3), ResolveMode::Normalization).unwrap();
        let ledger = xg_ledger(10, &tree).unwrap();
        assert_eq!(ledger.len(), 37);
        let x = lct_xg(&ledger);
        assert_eq!(x.value, rat(3, 10));
        assert_eq!(x.argmin, 0);

        // the first entry sees only the cone multiplicity: any double-point
        // tree under a degree-6 cone opens with candidate 3/6 = 1/2
        let q = Field::rationals();
        let cusp = resolution_tree(&germ(&q, "z^2 + x^3"), ResolveMode::Normalization).unwrap();
        let other = xg_ledger(6, &cusp).unwrap();
        assert_eq!(other[0].lct_candidate, rat(1, 2));
    }

    #[test]
    fn threefold_ledger_rejects_bad_input() {
        let q = Field::rationals();
        let cusp = resolution_tree(&germ(&q, "z^2 + x^3"), ResolveMode::Normalization).unwrap();
        assert!(matches!(xg_ledger(2, &cusp), Err(Error::BadDegree(_))));
    }

    #[test]
    fn index_ceiling_values() {
        assert_eq!(char0_max_am(8).unwrap(), 37);
        assert_eq!(char0_max_am(10).unwrap(), 61);
        assert_eq!(char0_max_am(2).unwrap(), 1);
        assert!(matches!(char0_max_am(7), Err(Error::BadDegree(_))));
        assert!(matches!(char0_max_am(0), Err(Error::BadDegree(_))));
    }

    #[test]
    fn lifting_verdicts_for_the_extremal_curves() {
        // degree 8 with index 42: a lift would need A_41, above the cap 37
        let v = lifting_verdict("cq n=3", 8, 42).unwrap();
        assert_eq!(v.verdict, Verdict::Obstructed);
        assert_eq!(v.char0_max, 37);
        assert!(v.reason.contains("41"));

        // degree 10 with index 72: 71 > 61
        let v = lifting_verdict("cq2 n=3", 10, 72).unwrap();
        assert_eq!(v.verdict, Verdict::Obstructed);
        assert_eq!(v.char0_max, 61);

        // degree 6 with index 20: 19 is exactly the cap, no obstruction
        let v = lifting_verdict("cq2 n=2", 6, 20).unwrap();
        assert_eq!(v.verdict, Verdict::NotObstructed);
        assert_eq!(v.char0_max, 19);

        // odd index has no two-sided dichotomy to test
        assert!(matches!(
            lifting_verdict("model", 6, 19),
            Err(Error::BadDegree(_))
        ));
    }
}
