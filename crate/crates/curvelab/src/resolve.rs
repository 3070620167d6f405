//! Resolution of plane-curve germs by iterated point blow-ups.
//!
//! The module provides:
//!
//! * [`CurveGerm`] — a local curve equation in two variables centered at the
//!   origin, optionally carrying a declared input precision;
//! * [`blowup_once`] — a single blow-up of the origin, returning the strict
//!   transforms in both standard charts;
//! * [`resolution_tree`] — the tree of infinitely near points, either in
//!   normalization mode (stop once every branch is smooth) or embedded mode
//!   (continue until the total transform has simple normal crossings), with a
//!   per-node multiplicity/discrepancy ledger;
//! * [`delta_via_tree`] and [`delta_via_semigroup`] — the delta invariant by
//!   two independent routes: summed multiplicities of infinitely near points,
//!   and gap counting in the value semigroup of a branch parametrization;
//! * [`branch_count`] and [`classify`] — analytic branch counting and A_m
//!   recognition, with the characteristic-2 exponent pair obtained from
//!   Weierstrass preparation plus Artin–Schreier reduction;
//! * [`dual_graph`] — the exceptional dual graph of an embedded tree with
//!   self-intersections and strict-transform attachments, renderable as DOT
//!   or ASCII;
//! * [`branch_at_infinity`] — exact branch parametrizations at the singular
//!   point of the parametrized curve families.
//!
//! Blow-ups act on exact polynomial germs, so the tree itself involves no
//! truncation; the precision machinery certifies that the tree is stable when
//! the defining equation is truncated, which guards germs whose tails are not
//! fully known.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, BinaryHeap};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use crate::curve::{germ_at, CurvePoint, ParamCurve, ProjPlaneCurve};
use crate::error::{Error, Result};
use crate::field::{Coef, Field};
use crate::poly::factor::{factor, roots_in_field, Embedding};
use crate::poly::series::PowerSeries;
use crate::poly::unipoly::UniPoly;
use crate::poly::weierstrass::{double_point_form, DoublePointForm};
use crate::poly::MultiPoly;

/// Canonical variable names used internally for germ polynomials.
const GERM_VARS: [&str; 2] = ["x", "z"];

// ---------------------------------------------------------------------------
// germs
// ---------------------------------------------------------------------------

/// A plane curve germ: a nonzero polynomial in two variables vanishing at the
/// origin.  Input variables are renamed positionally to `x`, `z`.
///
/// `precision: Some(n)` declares that the defining equation is only known
/// modulo terms of total degree `>= n`; resolution then refuses to certify
/// anything that would depend on the unknown tail.  `None` means the
/// polynomial is exact.
#[derive(Clone, Debug)]
pub struct CurveGerm {
    f: MultiPoly,
    names: [String; 2],
    precision: Option<u64>,
}

impl CurveGerm {
    /// Wrap a two-variable polynomial vanishing at the origin.
    pub fn new(f: &MultiPoly, precision: Option<u64>) -> Result<CurveGerm> {
        let vars = f.vars();
        if vars.len() != 2 || f.is_zero() {
            return Err(Error::NotAGerm);
        }
        let field = f.field().clone();
        let origin = [field.zero(), field.zero()];
        if !field.is_zero(&f.eval(&origin)) {
            return Err(Error::NotAGerm);
        }
        let names = [vars[0].to_string(), vars[1].to_string()];
        let terms = f
            .terms()
            .map(|(m, c)| (m.0.clone(), c.clone()))
            .collect::<Vec<_>>();
        Ok(CurveGerm {
            f: MultiPoly::from_terms(&field, &GERM_VARS, terms),
            names,
            precision,
        })
    }

    /// Localize a projective curve at one of its points.
    pub fn from_curve_point(curve: &ProjPlaneCurve, pt: &CurvePoint) -> Result<CurveGerm> {
        let (g, _chart) = germ_at(curve, pt)?;
        CurveGerm::new(&g, None)
    }

    pub fn field(&self) -> &Field {
        self.f.field()
    }

    /// The defining polynomial, in the internal variables `x`, `z`.
    pub fn poly(&self) -> &MultiPoly {
        &self.f
    }

    /// The variable names of the polynomial the germ was built from.
    pub fn variable_names(&self) -> (&str, &str) {
        (&self.names[0], &self.names[1])
    }

    pub fn precision(&self) -> Option<u64> {
        self.precision
    }

    /// Multiplicity at the origin (order of the lowest-degree form).
    pub fn multiplicity(&self) -> u64 {
        self.f.min_total_degree().expect("germ polynomial is nonzero")
    }

    /// Square-freeness check: a germ is reduced iff it shares no factor with
    /// its nonzero partial derivatives (and is not a p-th power).
    pub fn is_reduced(&self) -> bool {
        poly_is_reduced(&self.f)
    }
}

fn poly_is_reduced(f: &MultiPoly) -> bool {
    let mut partial_gcd: Option<MultiPoly> = None;
    for v in 0..2 {
        let d = f.derivative(v);
        if d.is_zero() {
            continue;
        }
        partial_gcd = Some(match partial_gcd {
            None => d,
            Some(h) => h.gcd(&d),
        });
    }
    match partial_gcd {
        None => false,
        Some(h) => f.gcd(&h).is_constant(),
    }
}

// ---------------------------------------------------------------------------
// one blow-up
// ---------------------------------------------------------------------------

/// Strict transforms of a germ in the two standard charts of one blow-up.
///
/// Chart conventions: `strict_x` lives in the chart `(x, z) -> (x, x·z)`
/// (the exceptional divisor is `{x = 0}`), `strict_z` in `(x, z) -> (x·z, z)`
/// (exceptional divisor `{z = 0}`).
#[derive(Clone, Debug)]
pub struct BlowupCharts {
    pub strict_x: MultiPoly,
    pub strict_z: MultiPoly,
    /// Multiplicity of the exceptional divisor in the total transform,
    /// equal to the multiplicity of the germ at the origin.
    pub exceptional_multiplicity: u64,
}

/// Substitute the blow-up map into `f` and divide out the exceptional factor.
/// `keep = 0` is the chart `(x, z) -> (x, x·z)`; `keep = 1` is `(x·z, z)`.
fn blow_chart(f: &MultiPoly, m: u64, keep: usize) -> Result<MultiPoly> {
    let field = f.field().clone();
    let x = MultiPoly::var(&field, &GERM_VARS, "x")?;
    let z = MultiPoly::var(&field, &GERM_VARS, "z")?;
    let xz = x.mul(&z);
    let sub = if keep == 0 {
        f.substitute(&[("z", xz)])?
    } else {
        f.substitute(&[("x", xz)])?
    };
    sub.div_var_power(keep, m as u32)
}

/// Blow up the origin once.  Errors on a unit germ (nothing to blow up).
pub fn blowup_once(f: &MultiPoly) -> Result<BlowupCharts> {
    let germ = CurveGerm::new(f, None)?;
    let m = germ.multiplicity();
    Ok(BlowupCharts {
        strict_x: blow_chart(germ.poly(), m, 0)?,
        strict_z: blow_chart(germ.poly(), m, 1)?,
        exceptional_multiplicity: m,
    })
}

// ---------------------------------------------------------------------------
// resolution trees
// ---------------------------------------------------------------------------

/// Stopping rule for [`resolution_tree`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResolveMode {
    /// Stop once every strict-transform branch is smooth.
    Normalization,
    /// Continue until the total transform has simple normal crossings.
    Embedded,
}

/// One infinitely near point of the resolution.
#[derive(Clone, Debug)]
pub struct BlowupNode {
    pub id: usize,
    pub parent: Option<usize>,
    /// Multiplicity of the strict transform at this center.
    pub multiplicity: u64,
    /// Number of Galois conjugates of this center over the parent's field.
    pub conj_degree: u64,
    /// Geometric copies of this center: product of `conj_degree` along the
    /// path from the root.
    pub weight: u64,
    /// Ids of the nodes whose exceptional divisors pass through this center.
    pub divisors_through: Vec<usize>,
    /// True when the center lies on two exceptional divisors.
    pub satellite: bool,
    /// Multiplicity of the total transform along this node's divisor:
    /// `a = m + Σ a_j` over divisors through the center.
    pub a: u64,
    /// Discrepancy of this node's divisor: `k = 1 + Σ k_j`.
    pub k: u64,
    pub children: Vec<usize>,
    /// Finished branch points on this node's exceptional divisor.
    pub leaves: Vec<BranchLeaf>,
}

/// A smooth branch point at which the resolution stops.
#[derive(Clone, Debug)]
pub struct BranchLeaf {
    /// Galois conjugates of the branch point over the node's field.
    pub conj_degree: u64,
    /// Nodes whose exceptional divisors pass through the branch point.
    pub on_divisors: Vec<usize>,
    /// Whether the branch meets every divisor through it transversally.
    pub transverse: bool,
}

/// The full tree of infinitely near points above a germ.
#[derive(Clone, Debug)]
pub struct BlowupTree {
    mode: ResolveMode,
    nodes: Vec<BlowupNode>,
    root: Option<usize>,
    germ_multiplicity: u64,
    certified_precision: u64,
}

impl BlowupTree {
    pub fn mode(&self) -> ResolveMode {
        self.mode
    }

    pub fn nodes(&self) -> &[BlowupNode] {
        &self.nodes
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    pub fn germ_multiplicity(&self) -> u64 {
        self.germ_multiplicity
    }

    /// Truncation level at which the tree shape was observed to be stable.
    pub fn certified_precision(&self) -> u64 {
        self.certified_precision
    }

    /// `δ = Σ m_i(m_i − 1)/2` over all geometric infinitely near points.
    pub fn delta(&self) -> u64 {
        self.nodes
            .iter()
            .map(|n| n.weight * n.multiplicity * (n.multiplicity - 1) / 2)
            .sum()
    }

    /// Branch endpoints counted with conjugacy (leaves of the tree).
    pub fn leaf_count(&self) -> u64 {
        self.nodes
            .iter()
            .map(|n| n.weight * n.leaves.iter().map(|l| l.conj_degree).sum::<u64>())
            .sum()
    }

    /// Multiplicities of all geometric infinitely near points, descending.
    pub fn multiplicities(&self) -> Vec<u64> {
        let mut out = Vec::new();
        for n in &self.nodes {
            for _ in 0..n.weight {
                out.push(n.multiplicity);
            }
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    /// Re-derive the ledger and structure flags by an independent walk and
    /// compare with the stored values.
    pub fn verify_ledger(&self) -> bool {
        for n in &self.nodes {
            let mut a = n.multiplicity;
            let mut k = 1;
            for &d in &n.divisors_through {
                if d >= n.id {
                    return false;
                }
                a += self.nodes[d].a;
                k += self.nodes[d].k;
            }
            if a != n.a || k != n.k || n.satellite != (n.divisors_through.len() == 2) {
                return false;
            }
            // the parent's divisor always passes through the center
            match n.parent {
                None => {
                    if !n.divisors_through.is_empty() {
                        return false;
                    }
                }
                Some(p) => {
                    if !n.divisors_through.contains(&p) {
                        return false;
                    }
                    if self.nodes[p].weight * n.conj_degree != n.weight {
                        return false;
                    }
                    if !self.nodes[p].children.contains(&n.id) {
                        return false;
                    }
                    // every divisor through the center belongs to an ancestor
                    for &d in &n.divisors_through {
                        let mut anc = Some(p);
                        let mut found = false;
                        while let Some(aid) = anc {
                            if aid == d {
                                found = true;
                                break;
                            }
                            anc = self.nodes[aid].parent;
                        }
                        if !found {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Shape string used for precision-stability comparison and tests.
    fn shape(&self) -> String {
        fn rec(nodes: &[BlowupNode], id: usize, out: &mut String) {
            let n = &nodes[id];
            let _ = write!(
                out,
                "({},{},{}",
                n.multiplicity,
                n.conj_degree,
                n.divisors_through.len()
            );
            let mut leaves: Vec<String> = n
                .leaves
                .iter()
                .map(|l| format!("{}:{}:{}", l.conj_degree, l.on_divisors.len(), l.transverse))
                .collect();
            leaves.sort();
            let _ = write!(out, "[{}]", leaves.join(","));
            let mut kids: Vec<String> = n
                .children
                .iter()
                .map(|&c| {
                    let mut s = String::new();
                    rec(nodes, c, &mut s);
                    s
                })
                .collect();
            kids.sort();
            for k in kids {
                out.push_str(&k);
            }
            out.push(')');
        }
        let mut s = String::new();
        if let Some(r) = self.root {
            rec(&self.nodes, r, &mut s);
        }
        s
    }

    /// DOT rendering of the blow-up tree (nodes labeled with m, a, k).
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph blowups {\n");
        for n in &self.nodes {
            let sat = if n.satellite { ", satellite" } else { "" };
            let _ = writeln!(
                s,
                "  n{} [label=\"p{}: m={} a={} k={}{}\"];",
                n.id, n.id, n.multiplicity, n.a, n.k, sat
            );
            if let Some(p) = n.parent {
                let _ = writeln!(s, "  n{} -> n{};", p, n.id);
            }
        }
        let mut leaf_idx = 0usize;
        for n in &self.nodes {
            for l in &n.leaves {
                let _ = writeln!(
                    s,
                    "  b{} [shape=box, label=\"branch x{}\"];\n  n{} -> b{};",
                    leaf_idx, l.conj_degree, n.id, leaf_idx
                );
                leaf_idx += 1;
            }
        }
        s.push_str("}\n");
        s
    }

    /// Indented ASCII rendering of the blow-up tree.
    pub fn to_ascii(&self) -> String {
        fn rec(tree: &BlowupTree, id: usize, depth: usize, out: &mut String) {
            let n = &tree.nodes[id];
            let pad = "  ".repeat(depth);
            let sat = if n.satellite { " satellite" } else { "" };
            let conj = if n.conj_degree > 1 {
                format!(" x{}", n.conj_degree)
            } else {
                String::new()
            };
            let _ = writeln!(out, "{pad}p{}: m={} a={} k={}{sat}{conj}", n.id, n.multiplicity, n.a, n.k);
            for l in &n.leaves {
                let t = if l.transverse { "transverse" } else { "tangent" };
                let _ = writeln!(out, "{pad}  branch x{} ({t})", l.conj_degree);
            }
            for &c in &n.children {
                rec(tree, c, depth + 1, out);
            }
        }
        let mut s = String::new();
        match self.root {
            None => s.push_str("(smooth germ: empty tree)\n"),
            Some(r) => rec(self, r, 0, &mut s),
        }
        s
    }
}

/// `δ` from a resolution tree: `Σ m_i(m_i − 1)/2` over infinitely near
/// points.  Embedded and normalization trees give the same value, because
/// multiplicity-1 nodes contribute nothing.
pub fn delta_via_tree(tree: &BlowupTree) -> u64 {
    tree.delta()
}

// -- internal germ state during resolution ----------------------------------

/// A germ together with the exceptional divisors along its coordinate axes:
/// `axes[0]` marks `{x = 0}`, `axes[1]` marks `{z = 0}` (node ids).
#[derive(Clone)]
struct LocalGerm {
    f: MultiPoly,
    axes: [Option<usize>; 2],
}

/// A point of the exceptional divisor that the strict transform passes
/// through, produced by scanning one chart.
struct ChartPoint {
    /// Translated germ at the point; `None` for conjugate families of simple
    /// transversal points, which finish immediately.
    germ: Option<MultiPoly>,
    /// Conjugates of the point over the current field.
    conj: u64,
    /// The point is the origin of the chart (keeps the older axis divisor).
    at_zero: bool,
}

struct Builder {
    mode: ResolveMode,
    nodes: Vec<BlowupNode>,
    budget: u64,
    spent: u64,
    node_cap: usize,
}

/// Intersection multiplicity at the origin of the germ with the coordinate
/// axis `{var = 0}`; `None` when the axis divides the germ.
fn axis_contact(f: &MultiPoly, axis_var: usize) -> Option<u64> {
    let field = f.field().clone();
    let restricted = f.subst_coef(axis_var, &field.zero());
    if restricted.is_zero() {
        None
    } else {
        Some(restricted.ord_in(1 - axis_var) as u64)
    }
}

/// Shift the second variable: `f(x, z + w0)`.
fn translate_z(f: &MultiPoly, w0: &Coef) -> Result<MultiPoly> {
    let field = f.field().clone();
    if field.is_zero(w0) {
        return Ok(f.clone());
    }
    let z = MultiPoly::var(&field, &GERM_VARS, "z")?;
    let shifted = z.add(&MultiPoly::constant(&field, &GERM_VARS, w0.clone()));
    f.substitute(&[("z", shifted)])
}

/// All positive divisors of `n`, or `None` if `n` does not fit in machine
/// range (callers then fall back to certifiable failure paths).
fn u64_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64()?;
    if n == 0 {
        return None;
    }
    let mut rest = n;
    let mut primes: Vec<(u64, u32)> = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= rest {
        if rest % d == 0 {
            let mut e = 0;
            while rest % d == 0 {
                rest /= d;
                e += 1;
            }
            primes.push((d, e));
        }
        d += 1;
    }
    if rest > 1 {
        primes.push((rest, 1));
    }
    let mut divs: Vec<u64> = vec![1];
    for (p, e) in primes {
        let base = divs.clone();
        let mut pw = 1u64;
        for _ in 0..e {
            pw = pw.saturating_mul(p);
            for b in &base {
                divs.push(b.saturating_mul(pw));
            }
        }
    }
    divs.sort_unstable();
    divs.dedup();
    Some(divs.into_iter().map(BigInt::from).collect())
}

/// Rational roots of a univariate polynomial over the rationals, with
/// multiplicities, and the deflated (root-free) cofactor.
fn rational_roots(u: &UniPoly) -> Result<(Vec<(Coef, u64)>, UniPoly)> {
    let field = u.field().clone();
    let mut out: Vec<(Coef, u64)> = Vec::new();
    let mut v = u.clone();
    // strip the root at zero
    let mut zero_mult = 0u64;
    while !v.is_zero() && field.is_zero(&v.get(0)) {
        let coeffs = v.coeffs()[1..].to_vec();
        v = UniPoly::from_coeffs(&field, coeffs);
        zero_mult += 1;
    }
    if zero_mult > 0 {
        out.push((field.zero(), zero_mult));
    }
    if v.degree().unwrap_or(0) == 0 {
        return Ok((out, v));
    }
    // candidate roots ±p/q from divisors of the integerized extreme coefficients
    let rats: Vec<BigRational> = v
        .coeffs()
        .iter()
        .map(|c| match c {
            Coef::Rat(r) => r.clone(),
            Coef::Fin(_) => unreachable!("rational root search on a finite field"),
        })
        .collect();
    let mut denom_lcm = BigInt::from(1);
    for r in &rats {
        denom_lcm = denom_lcm.lcm(r.denom());
    }
    let scale = BigRational::from_integer(denom_lcm);
    let ints: Vec<BigInt> = rats.iter().map(|r| (r * &scale).to_integer()).collect();
    let lead = ints.last().unwrap().clone();
    let tail = ints.first().unwrap().clone();
    let mut candidates: Vec<BigRational> = Vec::new();
    if let (Some(ps), Some(qs)) = (u64_divisors(&tail), u64_divisors(&lead)) {
        for p in &ps {
            for q in &qs {
                let c = BigRational::new(p.clone(), q.clone());
                candidates.push(c.clone());
                candidates.push(-c);
            }
        }
    } else {
        // coefficients out of machine range: probe a small grid only
        for n in 1..=4i64 {
            for d in 1..=3i64 {
                let c = BigRational::new(BigInt::from(n), BigInt::from(d));
                candidates.push(c.clone());
                candidates.push(-c);
            }
        }
    }
    candidates.sort();
    candidates.dedup();
    for c in candidates {
        let root = Coef::Rat(c);
        let mut mult = 0u64;
        while !v.is_constant() && field.is_zero(&v.eval(&root)) {
            let lin = UniPoly::from_coeffs(&field, vec![field.neg(&root), field.one()]);
            let (q, r) = v.divrem(&lin)?;
            debug_assert!(r.is_zero());
            v = q;
            mult += 1;
        }
        if mult > 0 {
            out.push((root, mult));
        }
    }
    Ok((out, v))
}

/// Points of the strict transform on the exceptional divisor in the chart
/// `(x, z) -> (x, x·z)`, from the restriction `u(w) = f1(0, w)`.
fn chart_x_points(f1: &MultiPoly, u: &UniPoly) -> Result<Vec<ChartPoint>> {
    let field = f1.field().clone();
    let mut out = Vec::new();
    if u.degree().unwrap_or(0) == 0 {
        return Ok(out);
    }
    if field.is_rational() {
        let (roots, leftover) = rational_roots(u)?;
        for (w0, _mult) in roots {
            out.push(ChartPoint {
                germ: Some(translate_z(f1, &w0)?),
                conj: 1,
                at_zero: field.is_zero(&w0),
            });
        }
        if leftover.degree().unwrap_or(0) > 0 {
            // simple irrational roots finish as transversal branch points;
            // multiple ones would require a number field
            let sqfree = leftover.gcd(&leftover.derivative()).is_constant();
            if !sqfree {
                return Err(Error::NumberFieldNeeded);
            }
            out.push(ChartPoint {
                germ: None,
                conj: leftover.degree().unwrap() as u64,
                at_zero: false,
            });
        }
        return Ok(out);
    }
    for (phi, mult) in factor(u)? {
        let d = match phi.degree() {
            Some(d) if d >= 1 => d as u64,
            _ => continue,
        };
        if d == 1 {
            let w0 = field.neg(&phi.get(0));
            out.push(ChartPoint {
                germ: Some(translate_z(f1, &w0)?),
                conj: 1,
                at_zero: field.is_zero(&w0),
            });
        } else if mult == 1 {
            // a conjugate family of simple transversal points
            out.push(ChartPoint {
                germ: None,
                conj: d,
                at_zero: false,
            });
        } else {
            // multiple root outside the field: base-change to its field
            let p = field.characteristic();
            let k_new = field.extension_degree() * d as u32;
            let big = Field::finite(p, k_new)?;
            let emb = Embedding::new(&field, &big)?;
            let f1_big = f1.map_field(&big, |c| emb.apply(c));
            let phi_big = emb.apply_poly(&phi);
            let roots = roots_in_field(&phi_big)?;
            let (w0, _) = roots.first().ok_or(Error::NumberFieldNeeded)?;
            out.push(ChartPoint {
                germ: Some(translate_z(&f1_big, w0)?),
                conj: d,
                at_zero: false,
            });
        }
    }
    Ok(out)
}

impl Builder {
    /// Create the node for a center and recurse into the points of its
    /// exceptional divisor.  Returns the node id.
    fn resolve_center(
        &mut self,
        germ: &LocalGerm,
        parent: Option<usize>,
        conj_degree: u64,
    ) -> Result<usize> {
        let m = germ.f.min_total_degree().ok_or(Error::NotAGerm)?;
        let weight = parent.map_or(1, |p| self.nodes[p].weight) * conj_degree;
        self.spent += weight * m * m.saturating_sub(1) / 2;
        if self.spent > self.budget {
            return Err(Error::ResolutionBudget(format!(
                "multiplicity budget {} exceeded",
                self.budget
            )));
        }
        if self.nodes.len() >= self.node_cap {
            return Err(Error::ResolutionBudget("node count cap exceeded".into()));
        }
        let divisors: Vec<usize> = germ.axes.iter().flatten().copied().collect();
        let a = m + divisors.iter().map(|&d| self.nodes[d].a).sum::<u64>();
        let k = 1 + divisors.iter().map(|&d| self.nodes[d].k).sum::<u64>();
        let id = self.nodes.len();
        self.nodes.push(BlowupNode {
            id,
            parent,
            multiplicity: m,
            conj_degree,
            weight,
            satellite: divisors.len() == 2,
            divisors_through: divisors,
            a,
            k,
            children: Vec::new(),
            leaves: Vec::new(),
        });

        // chart (x, z) -> (x, x·z): strict transform meets E = {x=0} at the
        // roots of u(w) = f1(0, w)
        let f1 = blow_chart(&germ.f, m, 0)?;
        let field = f1.field().clone();
        let u = f1.subst_coef(0, &field.zero()).as_univar(1)?;
        debug_assert!(!u.is_zero(), "strict transform meets the chart");
        for pt in chart_x_points(&f1, &u)? {
            match pt.germ {
                None => self.nodes[id].leaves.push(BranchLeaf {
                    conj_degree: pt.conj,
                    on_divisors: vec![id],
                    transverse: true,
                }),
                Some(g) => {
                    let second = if pt.at_zero { germ.axes[1] } else { None };
                    let child = LocalGerm {
                        f: g,
                        axes: [Some(id), second],
                    };
                    self.handle_child(child, id, pt.conj)?;
                }
            }
        }
        // second chart origin: present iff the direction [0:1] lies in the
        // tangent cone, i.e. deg u < m
        let deg_u = u.degree().unwrap_or(0) as u64;
        if deg_u < m {
            let f2 = blow_chart(&germ.f, m, 1)?;
            let child = LocalGerm {
                f: f2,
                axes: [germ.axes[0], Some(id)],
            };
            self.handle_child(child, id, 1)?;
        }
        Ok(id)
    }

    /// Decide, for a point of the strict transform on the new exceptional
    /// divisor, whether to stop (branch leaf) or blow up again.
    fn handle_child(&mut self, child: LocalGerm, parent: usize, conj: u64) -> Result<()> {
        let mc = child.f.min_total_degree().ok_or(Error::NotAGerm)?;
        if mc >= 2 {
            let cid = self.resolve_center(&child, Some(parent), conj)?;
            self.nodes[parent].children.push(cid);
            return Ok(());
        }
        // smooth branch point: check simple normal crossings with the axes
        let on: Vec<usize> = child.axes.iter().flatten().copied().collect();
        let mut transverse = true;
        for (axis, owner) in child.axes.iter().enumerate() {
            if owner.is_none() {
                continue;
            }
            match axis_contact(&child.f, axis) {
                None => return Err(Error::NotReduced),
                Some(1) => {}
                Some(_) => transverse = false,
            }
        }
        let snc = on.len() == 1 && transverse;
        if self.mode == ResolveMode::Embedded && !snc {
            let cid = self.resolve_center(&child, Some(parent), conj)?;
            self.nodes[parent].children.push(cid);
        } else {
            self.nodes[parent].leaves.push(BranchLeaf {
                conj_degree: conj,
                on_divisors: on,
                transverse,
            });
        }
        Ok(())
    }
}

fn try_resolve(
    f: &MultiPoly,
    mode: ResolveMode,
    budget: u64,
    node_cap: usize,
) -> Result<(Vec<BlowupNode>, Option<usize>)> {
    let m0 = f.min_total_degree().ok_or(Error::NotAGerm)?;
    if m0 == 0 {
        return Err(Error::NotAGerm);
    }
    if m0 == 1 {
        return Ok((Vec::new(), None));
    }
    // a truncation may collapse a reduced germ onto a repeated factor whose
    // resolution never terminates; reject it before spending blow-up budget
    if !poly_is_reduced(f) {
        return Err(Error::NotReduced);
    }
    let mut b = Builder {
        mode,
        nodes: Vec::new(),
        budget,
        spent: 0,
        node_cap,
    };
    let root = b.resolve_center(
        &LocalGerm {
            f: f.clone(),
            axes: [None, None],
        },
        None,
        1,
    )?;
    Ok((b.nodes, Some(root)))
}

/// Resolve a germ into its tree of infinitely near points.
///
/// The tree is computed from a truncation of the defining equation and
/// certified by checking that doubling the truncation level leaves the tree
/// shape unchanged; for exact polynomial input this always terminates with
/// the exact resolution.  Trees of germs with a declared finite precision
/// that cannot be certified within it are rejected.
pub fn resolution_tree(germ: &CurveGerm, mode: ResolveMode) -> Result<BlowupTree> {
    let f = germ.poly();
    let m0 = germ.multiplicity();
    if m0 == 1 {
        return Ok(BlowupTree {
            mode,
            nodes: Vec::new(),
            root: None,
            germ_multiplicity: m0,
            certified_precision: germ.precision().unwrap_or(0),
        });
    }
    if !germ.is_reduced() {
        return Err(Error::NotReduced);
    }
    let d_tot = f.total_degree().expect("germ polynomial is nonzero");
    let budget = d_tot * (d_tot - 1) / 2;
    let node_cap = budget as usize * 8 + 256;
    let mut window = (2 * m0).max(8);
    loop {
        let hi = 2 * window;
        if let Some(p) = germ.precision() {
            if hi > p {
                return Err(Error::ConductorUncertified {
                    precision: p as usize,
                });
            }
        }
        let hi_poly = f.truncate_total(hi);
        let hi_exact = hi_poly == *f;
        let lo = try_resolve(&f.truncate_total(window), mode, budget, node_cap);
        let hi_run = try_resolve(&hi_poly, mode, budget, node_cap);
        match (lo, hi_run) {
            (Ok((ln, lr)), Ok((hn, hr))) => {
                let lo_tree = BlowupTree {
                    mode,
                    nodes: ln,
                    root: lr,
                    germ_multiplicity: m0,
                    certified_precision: window,
                };
                let hi_tree = BlowupTree {
                    mode,
                    nodes: hn,
                    root: hr,
                    germ_multiplicity: m0,
                    certified_precision: hi,
                };
                if lo_tree.shape() == hi_tree.shape() {
                    return Ok(hi_tree);
                }
            }
            (_, Err(e)) if hi_exact => return Err(e),
            _ => {}
        }
        window = hi;
        if window > 8 * d_tot + 1024 {
            return Err(Error::ResolutionBudget(
                "tree shape failed to stabilize under precision doubling".into(),
            ));
        }
    }
}

/// Number of analytic branches: leaves of the normalization tree.
pub fn branch_count(germ: &CurveGerm) -> Result<u64> {
    let tree = resolution_tree(germ, ResolveMode::Normalization)?;
    if tree.root.is_none() {
        return Ok(1);
    }
    Ok(tree.leaf_count())
}

// ---------------------------------------------------------------------------
// value semigroups
// ---------------------------------------------------------------------------

/// Value semigroup of a branch, computed up to its conductor.
#[derive(Clone, Debug)]
pub struct SemigroupData {
    /// Number of gaps: the delta invariant of the branch.
    pub delta: u64,
    /// Smallest positive element (the branch multiplicity).
    pub multiplicity: u64,
    /// Least `c` with `[c, ∞) ⊆ S`.
    pub conductor: u64,
    /// Minimal generating set.
    pub generators: Vec<u64>,
    /// The gaps, ascending.
    pub gaps: Vec<u64>,
}

impl SemigroupData {
    pub fn contains(&self, v: u64) -> bool {
        v >= self.conductor || (!self.gaps.contains(&v))
    }

    /// Gorenstein symmetry: `s ∈ S ⇔ conductor − 1 − s ∉ S`.
    pub fn is_symmetric(&self) -> bool {
        if self.conductor == 0 {
            return true;
        }
        (0..self.conductor).all(|s| self.contains(s) != self.contains(self.conductor - 1 - s))
    }
}

struct WorkItem {
    val: u64,
    seq: u64,
    series: PowerSeries,
}

impl PartialEq for WorkItem {
    fn eq(&self, other: &Self) -> bool {
        self.val == other.val && self.seq == other.seq
    }
}
impl Eq for WorkItem {}
impl Ord for WorkItem {
    fn cmp(&self, other: &Self) -> Ordering {
        // reversed: BinaryHeap pops the smallest valuation first
        other
            .val
            .cmp(&self.val)
            .then_with(|| other.seq.cmp(&self.seq))
    }
}
impl PartialOrd for WorkItem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Value semigroup of the local algebra generated by a branch
/// parametrization `(x(u), z(u))`, by valuation-echelon closure: maintain one
/// representative per achieved valuation, close under multiplication by the
/// two generators, and stop once a full run of `multiplicity` consecutive
/// values certifies the conductor.
pub fn delta_via_semigroup(x: &PowerSeries, z: &PowerSeries) -> Result<SemigroupData> {
    if x.field() != z.field() {
        return Err(Error::FieldMismatch);
    }
    let field = x.field().clone();
    let w = x.prec().min(z.prec());
    let gens: Vec<PowerSeries> = [x, z]
        .iter()
        .map(|s| s.truncate(w))
        .filter(|s| !s.is_zero_mod_prec())
        .collect();
    for g in &gens {
        if g.valuation() == Some(0) {
            return Err(Error::NotAGerm);
        }
    }
    if gens.is_empty() {
        return Err(Error::NotAGerm);
    }

    let mut pivots: BTreeMap<u64, PowerSeries> = BTreeMap::new();
    let mut heap: BinaryHeap<WorkItem> = BinaryHeap::new();
    let mut seq = 0u64;
    heap.push(WorkItem {
        val: 0,
        seq,
        series: PowerSeries::one(&field, w),
    });

    // first run of `e` consecutive pivot valuations, recomputed on insert
    let run_start = |pivots: &BTreeMap<u64, PowerSeries>, e: u64| -> Option<u64> {
        let mut start = 0u64;
        let mut len = 0u64;
        for &v in pivots.keys() {
            if len > 0 && v == start + len {
                len += 1;
            } else {
                start = v;
                len = 1;
            }
            if len >= e {
                return Some(start);
            }
        }
        None
    };

    let mut stop: Option<u64> = None;
    while let Some(item) = heap.pop() {
        if let Some(s) = stop {
            if item.val >= s {
                break;
            }
        }
        let mut series = item.series;
        let new_val = loop {
            match series.valuation() {
                None => break None,
                Some(v) => {
                    let v = v as u64;
                    if let Some(s) = stop {
                        if v >= s {
                            break None;
                        }
                    }
                    match pivots.get(&v) {
                        None => break Some(v),
                        Some(p) => {
                            let c = field.div(&series.coeff(v as usize), &p.coeff(v as usize))?;
                            series = series.sub(&p.mul_coef(&c));
                        }
                    }
                }
            }
        };
        if let Some(v) = new_val {
            for g in &gens {
                let gv = g.valuation().expect("generators are nonzero") as u64;
                seq += 1;
                heap.push(WorkItem {
                    val: v + gv,
                    seq,
                    series: series.mul(g).truncate(w),
                });
            }
            pivots.insert(v, series);
            let e = pivots.keys().copied().find(|&v| v > 0);
            if let Some(e) = e {
                if let Some(c) = run_start(&pivots, e) {
                    stop = Some(c + e);
                }
            }
        }
    }

    let e = pivots
        .keys()
        .copied()
        .find(|&v| v > 0)
        .ok_or(Error::ConductorUncertified { precision: w })?;
    let conductor = run_start(&pivots, e).ok_or(Error::ConductorUncertified { precision: w })?;
    if conductor + e > w as u64 {
        return Err(Error::ConductorUncertified { precision: w });
    }
    let gaps: Vec<u64> = (0..conductor).filter(|v| !pivots.contains_key(v)).collect();
    let in_s = |v: u64| v == 0 || v >= conductor || pivots.contains_key(&v);
    let mut generators = Vec::new();
    for v in 1..=(conductor + e) {
        if !in_s(v) {
            continue;
        }
        let decomposable = (1..v).any(|a| in_s(a) && in_s(v - a));
        if !decomposable {
            generators.push(v);
        }
    }
    Ok(SemigroupData {
        delta: gaps.len() as u64,
        multiplicity: e,
        conductor,
        generators,
        gaps,
    })
}

/// Exact branch parametrization of a family curve `t -> (t^q, g(t^p) + t)`
/// at its point at infinity, in the germ coordinates of that point's chart
/// (substituting `t = 1/u`).
///
/// For `r = p·deg g − q > 0` the point is `(0:1:0)` and the pair is
/// `(x/y, z/y) = (u^r·N(u)^{-1}, u^{q+r}·N(u)^{-1})` for a polynomial unit
/// `N`; for `r < 0` it is `(1:0:0)` with the polynomial pair
/// `(y/x, z/x) = (Σ g_i u^{q−p·i} + u^{q−1}, u^q)`.
pub fn branch_at_infinity(curve: &ParamCurve, precision: usize) -> Result<(PowerSeries, PowerSeries)> {
    let fam = curve
        .family()
        .ok_or_else(|| Error::PresetRange("branch series require a family curve".into()))?;
    let field = curve.field().clone();
    let p = field.characteristic();
    let g = &fam.g;
    let dg = g.degree().ok_or(Error::ZeroG)? as u64;
    let q = fam.q;
    if fam.r == 0 {
        return Err(Error::PresetRange("family has r = 0, no point at infinity".into()));
    }
    if fam.r > 0 {
        let r = fam.r as u64;
        let d = p * dg; // the curve degree q + r
        let mut coeffs = vec![field.zero(); precision];
        for i in 0..=dg {
            let e = (d - p * i) as usize;
            if e < precision {
                coeffs[e] = field.add(&coeffs[e], &g.get(i as usize));
            }
        }
        if ((d - 1) as usize) < precision {
            let e = (d - 1) as usize;
            coeffs[e] = field.add(&coeffs[e], &field.one());
        }
        let n = PowerSeries::from_coeffs(&field, coeffs);
        let inv = n.invert()?;
        Ok((
            inv.shift(r as usize).truncate(precision),
            inv.shift(d as usize).truncate(precision),
        ))
    } else {
        let mut coeffs = vec![field.zero(); precision];
        for i in 0..=dg {
            let e = (q - p * i) as usize;
            if e < precision {
                coeffs[e] = field.add(&coeffs[e], &g.get(i as usize));
            }
        }
        if ((q - 1) as usize) < precision {
            let e = (q - 1) as usize;
            coeffs[e] = field.add(&coeffs[e], &field.one());
        }
        let first = PowerSeries::from_coeffs(&field, coeffs);
        let mut zc = vec![field.zero(); precision];
        if (q as usize) < precision {
            zc[q as usize] = field.one();
        }
        Ok((first, PowerSeries::from_coeffs(&field, zc)))
    }
}

// ---------------------------------------------------------------------------
// classification
// ---------------------------------------------------------------------------

/// Recognized singularity kinds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GermKind {
    Am,
    Dm,
    Other,
}

/// Classification report for a germ.
#[derive(Clone, Debug)]
pub struct SingularityType {
    pub kind: GermKind,
    /// The index for kind `Am` (0 for a smooth germ); 0 otherwise.
    pub m: u64,
    pub branches: u64,
    pub delta: u64,
    pub multiplicity: u64,
    /// Exponent data of the reduced quadratic form, characteristic 2 only.
    pub char2_normal_form: Option<DoublePointForm>,
    /// The normalization tree the invariants came from.
    pub tree: BlowupTree,
}

/// Weierstrass preparation plus reduction for a double point in
/// characteristic 2, after a coordinate change making the germ z-regular of
/// order 2.  Reports the orders of the reduced form `z² + a(x)·z + b(x)`.
pub fn char2_normal_form(germ: &CurveGerm, window: usize) -> Result<DoublePointForm> {
    let field = germ.field().clone();
    if field.characteristic() != 2 {
        return Err(Error::FieldMismatch);
    }
    if germ.multiplicity() != 2 {
        return Err(Error::NotADoublePoint {
            multiplicity: germ.multiplicity() as u32,
        });
    }
    let f = germ.poly();
    if !field.is_zero(&f.coef_of(&[0, 2])) {
        return double_point_form(f, 0, 1, window);
    }
    if !field.is_zero(&f.coef_of(&[2, 0])) {
        return double_point_form(f, 1, 0, window);
    }
    // tangent cone is x·z up to scale; shear x -> x + μ·z to expose a z² term
    let x = MultiPoly::var(&field, &GERM_VARS, "x")?;
    let z = MultiPoly::var(&field, &GERM_VARS, "z")?;
    for mu in field.enumerate().skip(1) {
        let sheared = f.substitute(&[("x", x.add(&z.mul_coef(&mu)))])?;
        if !field.is_zero(&sheared.coef_of(&[0, 2])) {
            return double_point_form(&sheared, 0, 1, window);
        }
    }
    Err(Error::NotZRegular)
}

/// Classify a reduced germ by its resolution invariants: for a double point,
/// `m = 2δ − branches + 1` names the A_m type; higher multiplicity is
/// reported as `Other` together with δ, branches, and the tree.
pub fn classify(germ: &CurveGerm) -> Result<SingularityType> {
    if !germ.is_reduced() {
        return Err(Error::NotReduced);
    }
    let mult = germ.multiplicity();
    let tree = resolution_tree(germ, ResolveMode::Normalization)?;
    let delta = tree.delta();
    let branches = if tree.root().is_none() {
        1
    } else {
        tree.leaf_count()
    };
    if mult == 1 {
        return Ok(SingularityType {
            kind: GermKind::Am,
            m: 0,
            branches: 1,
            delta: 0,
            multiplicity: 1,
            char2_normal_form: None,
            tree,
        });
    }
    if mult >= 3 {
        return Ok(SingularityType {
            kind: GermKind::Other,
            m: 0,
            branches,
            delta,
            multiplicity: mult,
            char2_normal_form: None,
            tree,
        });
    }
    assert!(
        branches == 1 || branches == 2,
        "a double point has at most two branches"
    );
    let m = 2 * delta + 1 - branches;
    let nf = if germ.field().characteristic() == 2 {
        Some(char2_normal_form(germ, 2 * (m as usize + 1))?)
    } else {
        None
    };
    Ok(SingularityType {
        kind: GermKind::Am,
        m,
        branches,
        delta,
        multiplicity: 2,
        char2_normal_form: nf,
        tree,
    })
}

// ---------------------------------------------------------------------------
// dual graphs
// ---------------------------------------------------------------------------

/// A vertex of the exceptional dual graph.
#[derive(Clone, Debug)]
pub struct GraphVertex {
    pub label: String,
    pub self_intersection: i64,
    /// Number of strict-transform branches attached to this curve.
    pub attachments: u64,
}

/// Dual graph of the exceptional curves of an embedded resolution.
#[derive(Clone, Debug)]
pub struct DualGraph {
    pub vertices: Vec<GraphVertex>,
    pub edges: Vec<(usize, usize)>,
}

fn edge_key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// Build the dual graph from an embedded tree.  Conjugate centers expand
/// into their geometric copies; every copy lowers the self-intersection of
/// the divisors its center lies on, and satellite centers separate the two
/// divisors they sit on.
pub fn dual_graph(tree: &BlowupTree) -> Result<DualGraph> {
    if tree.mode() != ResolveMode::Embedded {
        return Err(Error::NeedEmbeddedTree);
    }
    let mut verts: Vec<(i64, u64)> = Vec::new();
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();

    fn expand(
        tree: &BlowupTree,
        id: usize,
        divisor_vertex: &BTreeMap<usize, usize>,
        verts: &mut Vec<(i64, u64)>,
        edges: &mut BTreeSet<(usize, usize)>,
    ) -> Result<()> {
        let node = &tree.nodes()[id];
        for _copy in 0..node.conj_degree {
            let v = verts.len();
            verts.push((-1, 0));
            let on: Vec<usize> = node
                .divisors_through
                .iter()
                .map(|d| divisor_vertex[d])
                .collect();
            if on.len() == 2 {
                // a satellite center is the unique intersection point of its
                // two divisors; the new curve separates them
                assert!(
                    edges.remove(&edge_key(on[0], on[1])),
                    "satellite center lies on two adjacent divisors"
                );
            }
            for &u in &on {
                edges.insert(edge_key(v, u));
                verts[u].0 -= 1;
            }
            let mut map = divisor_vertex.clone();
            map.insert(id, v);
            for &c in &node.children {
                expand(tree, c, &map, verts, edges)?;
            }
            for leaf in &node.leaves {
                assert!(
                    leaf.on_divisors.len() == 1,
                    "embedded leaves lie on a single divisor"
                );
                let owner = map[&leaf.on_divisors[0]];
                verts[owner].1 += leaf.conj_degree;
            }
        }
        Ok(())
    }

    if let Some(root) = tree.root() {
        expand(tree, root, &BTreeMap::new(), &mut verts, &mut edges)?;
    }
    Ok(DualGraph {
        vertices: verts
            .into_iter()
            .enumerate()
            .map(|(i, (si, at))| GraphVertex {
                label: format!("C{i}"),
                self_intersection: si,
                attachments: at,
            })
            .collect(),
        edges: edges.into_iter().collect(),
    })
}

impl DualGraph {
    fn adjacency(&self) -> Vec<BTreeSet<usize>> {
        let mut adj = vec![BTreeSet::new(); self.vertices.len()];
        for &(a, b) in &self.edges {
            adj[a].insert(b);
            adj[b].insert(a);
        }
        adj
    }

    /// Canonical string: rooted tree canonization from the graph center(s).
    /// Equal strings characterize isomorphism (for tree-shaped graphs, which
    /// all blow-up dual graphs are).
    pub fn canonical_form(&self) -> String {
        let n = self.vertices.len();
        if n == 0 {
            return "()".into();
        }
        let adj = self.adjacency();
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &u in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    reached += 1;
                    stack.push(u);
                }
            }
        }
        if self.edges.len() != n - 1 || reached != n {
            let mut items: Vec<String> = (0..n)
                .map(|v| {
                    format!(
                        "{}:{}:{}",
                        self.vertices[v].self_intersection,
                        self.vertices[v].attachments,
                        adj[v].len()
                    )
                })
                .collect();
            items.sort();
            return format!("nontree:{}|{}", self.edges.len(), items.join(","));
        }
        // centers by iterated leaf stripping
        let mut degree: Vec<usize> = adj.iter().map(|s| s.len()).collect();
        let mut removed = vec![false; n];
        let mut frontier: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
        let mut remaining = n;
        while remaining > 2 {
            let mut next = Vec::new();
            for &v in &frontier {
                removed[v] = true;
                remaining -= 1;
                for &u in &adj[v] {
                    if !removed[u] {
                        degree[u] -= 1;
                        if degree[u] == 1 {
                            next.push(u);
                        }
                    }
                }
            }
            frontier = next;
        }
        fn ahu(g: &DualGraph, adj: &[BTreeSet<usize>], v: usize, parent: usize) -> String {
            let mut kids: Vec<String> = adj[v]
                .iter()
                .filter(|&&u| u != parent)
                .map(|&u| ahu(g, adj, u, v))
                .collect();
            kids.sort();
            format!(
                "({},{}|{})",
                g.vertices[v].self_intersection,
                g.vertices[v].attachments,
                kids.join("")
            )
        }
        (0..n)
            .filter(|&v| !removed[v])
            .map(|c| ahu(self, &adj, c, usize::MAX))
            .min()
            .unwrap()
    }

    pub fn isomorphic(&self, other: &DualGraph) -> bool {
        self.canonical_form() == other.canonical_form()
    }

    /// DOT rendering; branch attachments appear as box nodes.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph dual {\n");
        for (i, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(
                s,
                "  {} [label=\"{} ({})\"];",
                v.label, v.label, v.self_intersection
            );
            let _ = i;
        }
        for &(a, b) in &self.edges {
            let _ = writeln!(s, "  {} -- {};", self.vertices[a].label, self.vertices[b].label);
        }
        let mut bidx = 0usize;
        for v in &self.vertices {
            for _ in 0..v.attachments {
                let _ = writeln!(
                    s,
                    "  b{bidx} [shape=box, label=\"branch\"];\n  {} -- b{bidx};",
                    v.label
                );
                bidx += 1;
            }
        }
        s.push_str("}\n");
        s
    }

    /// ASCII rendering: a chain layout when the graph is a path, otherwise
    /// one adjacency line per vertex.  Attachment counts appear in braces.
    pub fn to_ascii(&self) -> String {
        let n = self.vertices.len();
        if n == 0 {
            return "(empty graph)".into();
        }
        let adj = self.adjacency();
        let fmt_v = |v: usize| {
            let gv = &self.vertices[v];
            if gv.attachments > 0 {
                format!("{}({}){{{}}}", gv.label, gv.self_intersection, gv.attachments)
            } else {
                format!("{}({})", gv.label, gv.self_intersection)
            }
        };
        let is_path = self.edges.len() == n - 1 && adj.iter().all(|s| s.len() <= 2);
        if is_path {
            let start = (0..n).find(|&v| adj[v].len() <= 1).unwrap_or(0);
            let mut order = vec![start];
            let mut prev = usize::MAX;
            let mut cur = start;
            while let Some(&next) = adj[cur].iter().find(|&&u| u != prev) {
                order.push(next);
                prev = cur;
                cur = next;
                if order.len() == n {
                    break;
                }
            }
            if order.len() == n {
                return order.iter().map(|&v| fmt_v(v)).collect::<Vec<_>>().join(" -- ");
            }
        }
        let mut lines = Vec::new();
        for (v, nbrs) in adj.iter().enumerate() {
            let nb: Vec<String> = nbrs.iter().map(|&u| self.vertices[u].label.clone()).collect();
            lines.push(format!("{}: {}", fmt_v(v), nb.join(" ")));
        }
        lines.join("\n")
    }
}

// ---------------------------------------------------------------------------
// tests
// ---------------------------------------------------------------------------
