//! Intersection lattices of resolved surfaces: negative-definiteness
//! certificates, Mumford pullbacks, and ADE contractions.
//!
//! The module provides:
//!
//! * [`IntersectionLattice`] — curves with rational self-intersections and
//!   pairwise intersection numbers, buildable programmatically, from the
//!   census of the parent module, or from a small text format (vertex lines
//!   `name self-int`, edge lines `name name mult`);
//! * [`IntersectionLattice::is_negative_definite`] — the leading-principal-
//!   minor sign test, run with fraction-free integer elimination;
//! * [`mumford_pullback`] — rational pullback coefficients of curves
//!   attached to a negative-definite exceptional set, and the corrected
//!   intersection numbers they define on the singular surface;
//! * [`contraction_check`] — contract the complement of a kept subset,
//!   identify the contracted clusters as ADE configurations by their dual
//!   graphs, and report the corrected intersection numbers of what remains;
//! * [`consistent_attachments`] — search over attachment positions on a
//!   chain for those reproducing prescribed corrected numbers.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::surfaces::SingularityCensus;

/// Curves with rational intersection numbers.  Vertices are named; edges
/// carry multiplicities; absent edges mean intersection 0.
#[derive(Clone, Debug, Default)]
pub struct IntersectionLattice {
    names: Vec<String>,
    self_int: Vec<BigRational>,
    index: BTreeMap<String, usize>,
    edges: BTreeMap<(usize, usize), BigRational>,
}

fn rat_i(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn parse_rational(s: &str) -> Result<BigRational> {
    BigRational::from_str(s)
        .map_err(|e| Error::Lattice(format!("bad rational `{s}`: {e}")))
}

impl IntersectionLattice {
    pub fn new() -> IntersectionLattice {
        IntersectionLattice::default()
    }

    /// Chain of `n` curves `C1 — C2 — ⋯ — Cn` of self-intersection −2.
    pub fn a_chain(n: usize) -> IntersectionLattice {
        let mut lat = IntersectionLattice::new();
        for i in 1..=n {
            lat.add_vertex(&format!("C{i}"), rat_i(-2)).expect("fresh name");
        }
        for i in 1..n {
            lat.add_edge(&format!("C{i}"), &format!("C{}", i + 1), BigRational::one())
                .expect("fresh edge");
        }
        lat
    }

    /// Disjoint chains matching a singular-point census: one A-chain per
    /// geometric point, so the vertex count is the exceptional-curve total.
    pub fn from_census(census: &SingularityCensus) -> IntersectionLattice {
        let mut lat = IntersectionLattice::new();
        for (ei, entry) in census.entries.iter().enumerate() {
            for copy in 0..entry.count {
                let name = |i: u64| format!("E{ei}.{copy}.{i}");
                for i in 1..=entry.type_index {
                    lat.add_vertex(&name(i), rat_i(-2)).expect("fresh name");
                }
                for i in 1..entry.type_index {
                    lat.add_edge(&name(i), &name(i + 1), BigRational::one())
                        .expect("fresh edge");
                }
            }
        }
        lat
    }

    /// Text format: one item per line; `name self-int` declares a vertex,
    /// `name name mult` an edge; `#` starts a comment.
    pub fn parse(text: &str) -> Result<IntersectionLattice> {
        let mut lat = IntersectionLattice::new();
        for (ln, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            match toks.as_slice() {
                [name, value] => {
                    lat.add_vertex(name, parse_rational(value)?)?;
                }
                [a, b, mult] => {
                    lat.add_edge(a, b, parse_rational(mult)?)?;
                }
                _ => {
                    return Err(Error::Lattice(format!(
                        "line {}: expected `name self-int` or `name name mult`, got `{line}`",
                        ln + 1
                    )));
                }
            }
        }
        Ok(lat)
    }

    pub fn add_vertex(&mut self, name: &str, self_int: BigRational) -> Result<usize> {
        if self.index.contains_key(name) {
            return Err(Error::Lattice(format!("duplicate vertex `{name}`")));
        }
        let id = self.names.len();
        self.names.push(name.to_string());
        self.self_int.push(self_int);
        self.index.insert(name.to_string(), id);
        Ok(id)
    }

    pub fn add_edge(&mut self, a: &str, b: &str, mult: BigRational) -> Result<()> {
        let i = self.index_of(a)?;
        let j = self.index_of(b)?;
        if i == j {
            return Err(Error::Lattice(format!("self-edge at `{a}`")));
        }
        let key = (i.min(j), i.max(j));
        if self.edges.contains_key(&key) {
            return Err(Error::Lattice(format!("duplicate edge `{a}`–`{b}`")));
        }
        if !mult.is_zero() {
            self.edges.insert(key, mult);
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::Lattice(format!("unknown vertex `{name}`")))
    }

    /// Intersection number of vertices `i` and `j` (self-intersection on the
    /// diagonal).
    pub fn pair(&self, i: usize, j: usize) -> BigRational {
        if i == j {
            return self.self_int[i].clone();
        }
        let key = (i.min(j), i.max(j));
        self.edges.get(&key).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Gram matrix of a vertex subset, in the given order.
    pub fn gram(&self, subset: &[usize]) -> Vec<Vec<BigRational>> {
        subset
            .iter()
            .map(|&i| subset.iter().map(|&j| self.pair(i, j)).collect())
            .collect()
    }

    /// Leading-principal-minor test: the k-th minor must have sign (−1)^k.
    pub fn is_negative_definite(&self, subset: &[usize]) -> bool {
        let minors = match leading_minors(&self.gram(subset)) {
            Some(m) => m,
            None => return subset.is_empty(),
        };
        if minors.len() < subset.len() {
            return false; // a vanishing minor cut the elimination short
        }
        minors.iter().enumerate().all(|(k, m)| {
            if k % 2 == 0 {
                m.is_negative()
            } else {
                m.is_positive()
            }
        })
    }
}

/// Leading principal minors by fraction-free (Bareiss) elimination after
/// clearing denominators; positive scaling preserves every sign.  Returns
/// `None` for the empty matrix; stops after a zero minor (the remaining ones
/// are not computed).
fn leading_minors(m: &[Vec<BigRational>]) -> Option<Vec<BigInt>> {
    let n = m.len();
    if n == 0 {
        return None;
    }
    let mut denom = BigInt::one();
    for row in m {
        for e in row {
            denom = num_integer::lcm(denom, e.denom().clone());
        }
    }
    let scale = BigRational::from_integer(denom);
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| row.iter().map(|e| (e * &scale).to_integer()).collect())
        .collect();

    let mut minors = Vec::with_capacity(n);
    let mut prev = BigInt::one();
    for k in 0..n {
        let pivot = a[k][k].clone();
        minors.push(pivot.clone());
        if pivot.is_zero() {
            break;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let t = &a[i][j] * &pivot - &a[i][k] * &a[k][j];
                a[i][j] = t / &prev;
            }
        }
        prev = pivot;
    }
    Some(minors)
}

/// Solve `A·x = b` exactly over the rationals, `A` nonsingular symmetric.
fn solve(a: &[Vec<BigRational>], b: &[BigRational]) -> Result<Vec<BigRational>> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a.to_vec();
    let mut rhs: Vec<BigRational> = b.to_vec();
    for col in 0..n {
        let pivot_row = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .ok_or_else(|| Error::NotNegativeDefinite("singular Gram matrix".into()))?;
        m.swap(col, pivot_row);
        rhs.swap(col, pivot_row);
        let inv = m[col][col].recip();
        for e in m[col].iter_mut().skip(col) {
            let t = &*e * &inv;
            *e = t;
        }
        let t = &rhs[col] * &inv;
        rhs[col] = t;
        let pivot_row = m[col].clone();
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for (j, e) in m[r].iter_mut().enumerate().skip(col) {
                let t = &*e - &(&pivot_row[j] * &f);
                *e = t;
            }
            let t = &rhs[r] - &(&rhs[col] * &f);
            rhs[r] = t;
        }
    }
    Ok(rhs)
}

/// A curve attached to the exceptional set: self-intersection on the smooth
/// model, and the exceptional curves it meets (transversally, once per
/// listed name).
#[derive(Clone, Debug)]
pub struct BarCurve {
    pub name: String,
    pub self_int: BigRational,
    pub attached: Vec<String>,
}

/// Output of [`mumford_pullback`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PullbackReport {
    /// Per curve: the rational coefficient of each lattice vertex in the
    /// orthogonalized pullback.
    pub coefficients: Vec<Vec<BigRational>>,
    /// Corrected intersection numbers on the singular surface.
    pub intersections: Vec<Vec<BigRational>>,
}

/// Orthogonalize curves against a negative-definite exceptional lattice.
///
/// For each curve the system `Gram · v = −attachment` is solved exactly; the
/// pullback is the curve plus `Σ v_k · (vertex k)`, and the corrected
/// numbers are `(B_i · B_j) = (B̄_i · B̄_j) + attachment_i · v_j`, with the
/// declared mutual numbers (`bar_mutual`, zero when omitted) as the smooth-
/// model input.
pub fn mumford_pullback(
    lat: &IntersectionLattice,
    bars: &[BarCurve],
    bar_mutual: &[(usize, usize, BigRational)],
) -> Result<PullbackReport> {
    let all: Vec<usize> = (0..lat.len()).collect();
    if !lat.is_negative_definite(&all) {
        return Err(Error::NotNegativeDefinite(
            "exceptional Gram matrix fails the minor sign test".into(),
        ));
    }
    let gram = lat.gram(&all);

    let mut attachments = Vec::with_capacity(bars.len());
    for b in bars {
        let mut att = vec![BigRational::zero(); lat.len()];
        for name in &b.attached {
            let i = lat.index_of(name)?;
            att[i] += BigRational::one();
        }
        attachments.push(att);
    }
    let coefficients: Vec<Vec<BigRational>> = attachments
        .iter()
        .map(|att| {
            let rhs: Vec<BigRational> = att.iter().map(|x| -x).collect();
            solve(&gram, &rhs)
        })
        .collect::<Result<_>>()?;

    let mut mutual: BTreeMap<(usize, usize), BigRational> = BTreeMap::new();
    for (i, j, v) in bar_mutual {
        let key = (*i.min(j), *i.max(j));
        mutual.insert(key, v.clone());
    }
    let bar_pair = |i: usize, j: usize| -> BigRational {
        if i == j {
            bars[i].self_int.clone()
        } else {
            mutual
                .get(&(i.min(j), i.max(j)))
                .cloned()
                .unwrap_or_else(BigRational::zero)
        }
    };

    let k = bars.len();
    let mut intersections = vec![vec![BigRational::zero(); k]; k];
    for i in 0..k {
        for j in i..k {
            let dot: BigRational = attachments[i]
                .iter()
                .zip(&coefficients[j])
                .map(|(a, v)| a * v)
                .sum();
            let val = bar_pair(i, j) + dot;
            intersections[i][j] = val.clone();
            intersections[j][i] = val;
        }
    }
    Ok(PullbackReport {
        coefficients,
        intersections,
    })
}

/// Output of [`contraction_check`].
#[derive(Clone, Debug)]
pub struct ContractionReport {
    /// ADE type of each contracted cluster, e.g. `("E8", 8)`.
    pub clusters: Vec<(String, usize)>,
    /// Names of the kept curves, in lattice order.
    pub kept: Vec<String>,
    /// Corrected intersection numbers among the kept curves.
    pub intersections: Vec<Vec<BigRational>>,
}

impl ContractionReport {
    /// Cluster tally in the style `2E8+5A1`, larger clusters first.
    pub fn summary(&self) -> String {
        let mut tally: BTreeMap<(i64, String), usize> = BTreeMap::new();
        for (name, size) in &self.clusters {
            *tally.entry((-(*size as i64), name.clone())).or_insert(0) += 1;
        }
        tally
            .iter()
            .map(|((_, name), count)| {
                if *count == 1 {
                    name.clone()
                } else {
                    format!("{count}{name}")
                }
            })
            .collect::<Vec<_>>()
            .join("+")
    }
}

/// Identify a connected cluster of curves as an ADE configuration: all
/// self-intersections −2, all edge multiplicities 1, dual graph a tree that
/// is a path (A), a path with one short branch (D), or one of the three
/// exceptional branch patterns (E6, E7, E8).
fn ade_type(lat: &IntersectionLattice, cluster: &[usize]) -> Result<(String, usize)> {
    let n = cluster.len();
    let bad = |why: String| Error::NotAde(why);
    for &v in cluster {
        if lat.pair(v, v) != rat_i(-2) {
            return Err(bad(format!(
                "curve `{}` has self-intersection {}, not -2",
                lat.name(v),
                lat.pair(v, v)
            )));
        }
    }
    let pos: BTreeMap<usize, usize> = cluster.iter().enumerate().map(|(k, &v)| (v, k)).collect();
    let mut adj = vec![Vec::new(); n];
    let mut edge_count = 0usize;
    for (k, &v) in cluster.iter().enumerate() {
        for &w in cluster {
            if w <= v {
                continue;
            }
            let m = lat.pair(v, w);
            if m.is_zero() {
                continue;
            }
            if m != BigRational::one() {
                return Err(bad(format!(
                    "edge `{}`–`{}` has multiplicity {m}, not 1",
                    lat.name(v),
                    lat.name(w)
                )));
            }
            adj[k].push(pos[&w]);
            adj[pos[&w]].push(k);
            edge_count += 1;
        }
    }
    if edge_count != n - 1 {
        return Err(bad(format!(
            "cluster of {n} curves has {edge_count} edges; its dual graph is not a tree"
        )));
    }
    if adj.iter().any(|nb| nb.len() > 3) {
        return Err(bad("a curve meets more than three others".into()));
    }
    let branch: Vec<usize> = (0..n).filter(|&k| adj[k].len() == 3).collect();
    match branch.len() {
        0 => Ok((format!("A{n}"), n)),
        1 => {
            // arm lengths away from the unique branch vertex
            let mut arms = Vec::new();
            for &start in &adj[branch[0]] {
                let mut len = 1usize;
                let mut prev = branch[0];
                let mut cur = start;
                while let Some(&next) = adj[cur].iter().find(|&&w| w != prev) {
                    prev = cur;
                    cur = next;
                    len += 1;
                }
                arms.push(len);
            }
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, k] => Ok((format!("D{}", k + 3), n)),
                [1, 2, 2] => Ok(("E6".into(), n)),
                [1, 2, 3] => Ok(("E7".into(), n)),
                [1, 2, 4] => Ok(("E8".into(), n)),
                other => Err(bad(format!("branch with arm lengths {other:?} is not ADE"))),
            }
        }
        _ => Err(bad("more than one branch vertex".into())),
    }
}

fn connected_components(lat: &IntersectionLattice, subset: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; subset.len()];
    let pos: BTreeMap<usize, usize> = subset.iter().enumerate().map(|(k, &v)| (v, k)).collect();
    let mut comps = Vec::new();
    for start in 0..subset.len() {
        if seen[start] {
            continue;
        }
        let mut stack = vec![start];
        let mut comp = Vec::new();
        seen[start] = true;
        while let Some(k) = stack.pop() {
            comp.push(subset[k]);
            for &w in subset {
                if let Some(&kw) = pos.get(&w) {
                    if !seen[kw] && !lat.pair(subset[k], w).is_zero() {
                        seen[kw] = true;
                        stack.push(kw);
                    }
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// Contract every curve outside `keep`: verify the complement splits into
/// ADE clusters, then report the clusters and the Mumford-corrected
/// intersection numbers of the kept curves.
pub fn contraction_check(lat: &IntersectionLattice, keep: &[&str]) -> Result<ContractionReport> {
    let mut kept_idx = Vec::with_capacity(keep.len());
    for name in keep {
        kept_idx.push(lat.index_of(name)?);
    }
    let complement: Vec<usize> = (0..lat.len()).filter(|i| !kept_idx.contains(i)).collect();

    let mut clusters = Vec::new();
    for comp in connected_components(lat, &complement) {
        clusters.push(ade_type(lat, &comp)?);
        // an ADE cluster is negative definite; certify it anyway
        if !lat.is_negative_definite(&comp) {
            return Err(Error::NotNegativeDefinite(format!(
                "cluster {:?} fails the minor sign test",
                comp.iter().map(|&i| lat.name(i)).collect::<Vec<_>>()
            )));
        }
    }
    clusters.sort_by_key(|(name, size)| (usize::MAX - *size, name.clone()));

    // corrected numbers among the kept curves
    let gram = lat.gram(&complement);
    let att = |i: usize| -> Vec<BigRational> {
        complement.iter().map(|&c| lat.pair(i, c)).collect()
    };
    let coeffs: Vec<Vec<BigRational>> = kept_idx
        .iter()
        .map(|&i| {
            if complement.is_empty() {
                return Ok(Vec::new());
            }
            let rhs: Vec<BigRational> = att(i).iter().map(|x| -x).collect();
            solve(&gram, &rhs)
        })
        .collect::<Result<_>>()?;
    let k = kept_idx.len();
    let mut intersections = vec![vec![BigRational::zero(); k]; k];
    for a in 0..k {
        let att_a = att(kept_idx[a]);
        for b in a..k {
            let dot: BigRational = att_a.iter().zip(&coeffs[b]).map(|(x, v)| x * v).sum();
            let val = lat.pair(kept_idx[a], kept_idx[b]) + dot;
            intersections[a][b] = val.clone();
            intersections[b][a] = val;
        }
    }
    Ok(ContractionReport {
        clusters,
        kept: kept_idx.iter().map(|&i| lat.name(i).to_string()).collect(),
        intersections,
    })
}

/// Closed form for the inverse of the A_n chain Gram matrix (negated):
/// entry `(i, j)` is `min(i,j)·(n+1−max(i,j)) / (n+1)` with 1-based indices.
pub fn chain_inverse_entry(n: usize, i: usize, j: usize) -> BigRational {
    let (lo, hi) = (i.min(j) as i64, i.max(j) as i64);
    BigRational::new(BigInt::from(lo * (n as i64 + 1 - hi)), BigInt::from(n as i64 + 1))
}

/// Sweep attachment positions `(i, j)` of two curves of self-intersection
/// `bar_self` on the A_n chain, keeping those whose corrected numbers equal
/// the prescribed cross and self values.
pub fn consistent_attachments(
    n: usize,
    bar_self: &BigRational,
    cross: &BigRational,
    self_corrected: &BigRational,
) -> Result<Vec<(usize, usize)>> {
    let lat = IntersectionLattice::a_chain(n);
    let mut found = Vec::new();
    for i in 1..=n {
        for j in i..=n {
            let bars = [
                BarCurve {
                    name: "B1".into(),
                    self_int: bar_self.clone(),
                    attached: vec![format!("C{i}")],
                },
                BarCurve {
                    name: "B2".into(),
                    self_int: bar_self.clone(),
                    attached: vec![format!("C{j}")],
                },
            ];
            let rep = mumford_pullback(&lat, &bars, &[])?;
            if rep.intersections[0][1] == *cross
                && rep.intersections[0][0] == *self_corrected
                && rep.intersections[1][1] == *self_corrected
            {
                found.push((i, j));
            }
        }
    }
    Ok(found)
}

// ---------------------------------------------------------------------------
// tests
// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surfaces::{jacobian_census, DoublePlane};
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn bar(name: &str, self_int: BigRational, attached: &[&str]) -> BarCurve {
        BarCurve {
            name: name.into(),
            self_int,
            attached: attached.iter().map(|s| s.to_string()).collect(),
        }
    }

    #[test]
    fn pullback_on_the_long_chain() {
        let lat = IntersectionLattice::a_chain(15);
        let bars = [
            bar("B1", rat_i(-2), &["C3"]),
            bar("B2", rat_i(-2), &["C13"]),
        ];
        let rep = mumford_pullback(&lat, &bars, &[]).unwrap();
        assert_eq!(rep.intersections[0][1], rat(9, 16));
        assert_eq!(rep.intersections[0][0], rat(7, 16));
        assert_eq!(rep.intersections[1][1], rat(7, 16));
        // coefficients follow the chain-inverse closed form
        for (k, v) in rep.coefficients[0].iter().enumerate() {
            assert_eq!(*v, chain_inverse_entry(15, k + 1, 3));
        }
    }

    #[test]
    fn single_node_and_empty_attachment() {
        let lat = IntersectionLattice::a_chain(1);
        let rep = mumford_pullback(&lat, &[bar("B", rat_i(-2), &["C1"])], &[]).unwrap();
        assert_eq!(rep.coefficients[0], vec![rat(1, 2)]);
        assert_eq!(rep.intersections[0][0], rat(-3, 2));

        let rep = mumford_pullback(&lat, &[bar("B", rat_i(-7), &[])], &[]).unwrap();
        assert!(rep.coefficients[0].iter().all(|v| v.is_zero()));
        assert_eq!(rep.intersections[0][0], rat_i(-7));
    }

    #[test]
    fn chain_coefficients_match_the_closed_form() {
        for n in 1..=20usize {
            let lat = IntersectionLattice::a_chain(n);
            for i in 1..=n {
                let rep =
                    mumford_pullback(&lat, &[bar("B", rat_i(-2), &[&format!("C{i}")])], &[])
                        .unwrap();
                for (k, v) in rep.coefficients[0].iter().enumerate() {
                    assert_eq!(*v, chain_inverse_entry(n, k + 1, i), "n={n} i={i} k={k}");
                }
                let expect = rat_i(-2) + chain_inverse_entry(n, i, i);
                assert_eq!(rep.intersections[0][0], expect);
            }
        }
    }

    #[test]
    fn full_resolution_contraction() {
        // resolved first surface: the 15-chain, the two curves over z = 0
        // attached at positions 3 and 13, and five disjoint nodes
        let mut lat = IntersectionLattice::a_chain(15);
        lat.add_vertex("B1", rat_i(-2)).unwrap();
        lat.add_vertex("B2", rat_i(-2)).unwrap();
        lat.add_edge("B1", "C3", BigRational::one()).unwrap();
        lat.add_edge("B2", "C13", BigRational::one()).unwrap();
        for i in 1..=5 {
            lat.add_vertex(&format!("P{i}"), rat_i(-2)).unwrap();
        }
        let rep = contraction_check(&lat, &["C8"]).unwrap();
        assert_eq!(rep.summary(), "2E8+5A1");
        assert_eq!(rep.kept, vec!["C8".to_string()]);
        assert_eq!(rep.intersections[0][0], rat_i(2));
    }

    #[test]
    fn trivial_and_small_contractions() {
        let lat = IntersectionLattice::a_chain(3);
        // keep everything: nothing to contract, numbers unchanged
        let rep = contraction_check(&lat, &["C1", "C2", "C3"]).unwrap();
        assert!(rep.clusters.is_empty());
        assert_eq!(rep.summary(), "");
        assert_eq!(rep.intersections[0][0], rat_i(-2));
        assert_eq!(rep.intersections[0][1], rat_i(1));
        // keep the middle: two nodes collapse, each adding 1/2
        let rep = contraction_check(&lat, &["C2"]).unwrap();
        assert_eq!(rep.summary(), "2A1");
        assert_eq!(rep.intersections[0][0], rat_i(-1));
    }

    #[test]
    fn ade_recognition_beyond_chains() {
        // D5: chain of 4 with a short branch at the second vertex
        let mut lat = IntersectionLattice::a_chain(4);
        lat.add_vertex("F", rat_i(-2)).unwrap();
        lat.add_edge("F", "C2", BigRational::one()).unwrap();
        lat.add_vertex("K", rat_i(-1)).unwrap();
        let rep = contraction_check(&lat, &["K"]).unwrap();
        assert_eq!(rep.summary(), "D5");

        // E7: arms 1, 2, 3
        let mut lat = IntersectionLattice::a_chain(6);
        lat.add_vertex("F", rat_i(-2)).unwrap();
        lat.add_edge("F", "C3", BigRational::one()).unwrap();
        lat.add_vertex("K", rat_i(-1)).unwrap();
        let rep = contraction_check(&lat, &["K"]).unwrap();
        assert_eq!(rep.summary(), "E7");
    }

    #[test]
    fn non_ade_clusters_are_rejected() {
        // wrong self-intersection
        let mut lat = IntersectionLattice::new();
        lat.add_vertex("C1", rat_i(-3)).unwrap();
        lat.add_vertex("K", rat_i(-1)).unwrap();
        assert!(matches!(contraction_check(&lat, &["K"]), Err(Error::NotAde(_))));

        // a cycle is not a tree
        let mut lat = IntersectionLattice::a_chain(3);
        lat.add_edge("C3", "C1", BigRational::one()).unwrap();
        lat.add_vertex("K", rat_i(-1)).unwrap();
        assert!(matches!(contraction_check(&lat, &["K"]), Err(Error::NotAde(_))));

        // arm pattern (1, 3, 3) is the affine E7 shape, not a Dynkin diagram
        let mut lat = IntersectionLattice::a_chain(7);
        lat.add_vertex("F", rat_i(-2)).unwrap();
        lat.add_edge("F", "C4", BigRational::one()).unwrap();
        lat.add_vertex("K", rat_i(-1)).unwrap();
        assert!(matches!(contraction_check(&lat, &["K"]), Err(Error::NotAde(_))));
    }

    #[test]
    fn negative_definiteness_detection() {
        let lat = IntersectionLattice::a_chain(5);
        let all: Vec<usize> = (0..5).collect();
        assert!(lat.is_negative_definite(&all));

        let mut bad = IntersectionLattice::new();
        bad.add_vertex("C1", rat_i(1)).unwrap();
        assert!(!bad.is_negative_definite(&[0]));
        let r = mumford_pullback(&bad, &[], &[]);
        assert!(matches!(r, Err(Error::NotNegativeDefinite(_))));

        // affine chain: minor of full size vanishes
        let mut aff = IntersectionLattice::a_chain(3);
        aff.add_edge("C3", "C1", BigRational::one()).unwrap();
        let all: Vec<usize> = (0..3).collect();
        assert!(!aff.is_negative_definite(&all));
    }

    #[test]
    fn census_lattices_are_negative_definite() {
        for r in [1u64, 2] {
            let census = jacobian_census(&DoublePlane::new(r).unwrap()).unwrap();
            let lat = IntersectionLattice::from_census(&census);
            assert_eq!(lat.len() as u64, census.total_exceptional);
            let all: Vec<usize> = (0..lat.len()).collect();
            assert!(lat.is_negative_definite(&all));
        }
    }

    #[test]
    fn attachment_search_recovers_the_diagram() {
        let found = consistent_attachments(15, &rat_i(-2), &rat(9, 16), &rat(7, 16)).unwrap();
        assert_eq!(found, vec![(3, 13)]);
    }

    #[test]
    fn text_format_roundtrip_and_errors() {
        let lat = IntersectionLattice::parse(
            "# a two-curve configuration\n\
             C1 -2\n\
             C2 -3/2\n\
             C1 C2 1\n",
        )
        .unwrap();
        assert_eq!(lat.len(), 2);
        assert_eq!(lat.pair(0, 0), rat_i(-2));
        assert_eq!(lat.pair(1, 1), rat(-3, 2));
        assert_eq!(lat.pair(0, 1), rat_i(1));

        assert!(matches!(
            IntersectionLattice::parse("C1 -2 extra junk"),
            Err(Error::Lattice(_))
        ));
        assert!(matches!(
            IntersectionLattice::parse("C1 -2\nC1 -2"),
            Err(Error::Lattice(_))
        ));
        assert!(matches!(
            IntersectionLattice::parse("C1 -2\nC1 C9 1"),
            Err(Error::Lattice(_))
        ));
        assert!(matches!(
            IntersectionLattice::parse("C1 banana"),
            Err(Error::Lattice(_))
        ));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn relabeling_leaves_pullback_numbers_alone(
            n in 2usize..10,
            seed in 0u64..1000,
            pos in 1usize..10,
        ) {
            let pos = (pos % n) + 1;
            // a pseudo-random insertion order for the same chain
            let mut order: Vec<usize> = (1..=n).collect();
            let mut s = seed;
            for i in (1..n).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                order.swap(i, (s % (i as u64 + 1)) as usize);
            }
            let mut lat = IntersectionLattice::new();
            for &i in &order {
                lat.add_vertex(&format!("C{i}"), rat_i(-2)).unwrap();
            }
            for i in 1..n {
                lat.add_edge(&format!("C{i}"), &format!("C{}", i + 1), BigRational::one()).unwrap();
            }
            let shuffled = mumford_pullback(
                &lat,
                &[bar("B", rat_i(-2), &[&format!("C{pos}")])],
                &[],
            ).unwrap();
            let plain = mumford_pullback(
                &IntersectionLattice::a_chain(n),
                &[bar("B", rat_i(-2), &[&format!("C{pos}")])],
                &[],
            ).unwrap();
            prop_assert_eq!(
                &shuffled.intersections[0][0],
                &plain.intersections[0][0]
            );
        }
    }
}
