//! Plane curves over small finite fields: parametrized constructions,
//! implicitization, and certified location of singular points.
//!
//! The module provides:
//!
//! * [`ParamCurve`] — a polynomial map `t -> (x(t), y(t))` from the affine
//!   line to the affine plane, with the family constructors
//!   [`make_param_curve`], [`c_q2`] and [`c_q`] building maps of the shape
//!   `t -> (t^q, g(t^p) + t)`;
//! * [`implicitize`] — elimination of the parameter by a resultant, with
//!   reduction of inseparable powers in the eliminant;
//! * [`ProjPlaneCurve`] — a homogeneous plane curve with recorded degree and
//!   reducedness;
//! * [`singular_points`] — a chartwise search for every singular point over
//!   bounded field extensions, returning a degree-accounting completeness
//!   certificate alongside the points;
//! * [`multiplicity_at`], [`embedding_check`], [`genus_check`], and
//!   [`germ_at`] for local analysis at a chosen point.

use std::collections::BTreeMap;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::field::{Coef, Field};
use crate::poly::factor::{factor, roots_in_field, Embedding};
use crate::poly::resultant::resultant;
use crate::poly::unipoly::UniPoly;
use crate::poly::MultiPoly;

/// Default bound on the extension degree searched for singular points.
pub const DEFAULT_K_MAX: u32 = 8;

/// Exponent cap for `q = p^n` in parametrized families; keeps the dense
/// univariate representation of `t^q` small.
const MAX_Q: u64 = 1 << 12;

// ---------------------------------------------------------------------------
// parametrized curves
// ---------------------------------------------------------------------------

/// Bookkeeping for curves of the family shape `t -> (t^q, g(t^p) + t)`.
#[derive(Debug, Clone)]
pub struct FamilyData {
    /// The power `q = p^n`.
    pub q: u64,
    /// The exponent `n` with `q = p^n`.
    pub n: u32,
    /// The defining univariate polynomial `g` over the prime field.
    pub g: UniPoly,
    /// `r = p·deg(g) − q`; governs the point at infinity (may be negative).
    pub r: i64,
}

/// A polynomial map from the affine line to the affine plane.
#[derive(Debug, Clone)]
pub struct ParamCurve {
    field: Field,
    x: UniPoly,
    y: UniPoly,
    family: Option<FamilyData>,
}

impl ParamCurve {
    /// Wrap an arbitrary coordinate pair `(x(t), y(t))` over a common field.
    pub fn from_pair(x: UniPoly, y: UniPoly) -> Result<ParamCurve> {
        if x.field() != y.field() {
            return Err(Error::FieldMismatch);
        }
        if x.is_zero() && y.is_zero() {
            return Err(Error::ZeroG);
        }
        Ok(ParamCurve {
            field: x.field().clone(),
            x,
            y,
            family: None,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// First coordinate polynomial `x(t)`.
    pub fn x_poly(&self) -> &UniPoly {
        &self.x
    }

    /// Second coordinate polynomial `y(t)`.
    pub fn y_poly(&self) -> &UniPoly {
        &self.y
    }

    /// Family data `(q, n, g, r)` when built by [`make_param_curve`].
    pub fn family(&self) -> Option<&FamilyData> {
        self.family.as_ref()
    }

    /// Evaluate the map at a parameter value.
    pub fn eval(&self, t: &Coef) -> (Coef, Coef) {
        (self.x.eval(t), self.y.eval(t))
    }
}

/// Build the parametrized curve `t -> (t^q, g(t^p) + t)` with `q = p^n`.
///
/// `g` must be a nonzero univariate polynomial over the prime field `F_p`;
/// the quantity `r = p·deg(g) − q` is recorded on the result.
pub fn make_param_curve(p: u64, n: u32, g: &UniPoly) -> Result<ParamCurve> {
    let field = g.field().clone();
    if field.is_rational() || field.characteristic() != p || field.extension_degree() != 1 {
        return Err(Error::FieldMismatch);
    }
    if g.is_zero() {
        return Err(Error::ZeroG);
    }
    if n < 1 {
        return Err(Error::PresetRange("exponent n must be at least 1".into()));
    }
    let q = p
        .checked_pow(n)
        .filter(|&q| q <= MAX_Q)
        .ok_or_else(|| Error::PresetRange(format!("q = {p}^{n} exceeds the supported range")))?;
    // x(t) = t^q
    let mut xc = vec![field.zero(); q as usize + 1];
    xc[q as usize] = field.one();
    let x = UniPoly::from_coeffs(&field, xc);
    // y(t) = g(t^p) + t
    let dg = g.degree().unwrap() as u64;
    let mut yc = vec![field.zero(); (p * dg + 1).max(2) as usize];
    for (i, c) in g.coeffs().iter().enumerate() {
        yc[i * p as usize] = c.clone();
    }
    yc[1] = field.add(&yc[1], &field.one());
    let y = UniPoly::from_coeffs(&field, yc);
    let r = (p * dg) as i64 - q as i64;
    Ok(ParamCurve {
        field,
        x,
        y,
        family: Some(FamilyData {
            q,
            n,
            g: g.clone(),
            r,
        }),
    })
}

/// Preset: the even-degree family over `F_2` with `q = 2^n` and
/// `g(u) = u^{2^{n−1}+1}`, giving a plane curve of degree `2^n + 2`.
pub fn c_q2(n: u32) -> Result<ParamCurve> {
    if n < 1 {
        return Err(Error::PresetRange("preset cq2 requires n >= 1".into()));
    }
    let f2 = Field::finite(2, 1)?;
    let e = (1u64 << (n - 1)) + 1;
    let g = monomial(&f2, e as usize);
    make_param_curve(2, n, &g)
}

/// Preset: the power-degree family over `F_2` with `q = 2^n` and
/// `g(u) = u^{2^{n−1}−1}`, giving a plane curve of degree `2^n`.
pub fn c_q(n: u32) -> Result<ParamCurve> {
    if n < 2 {
        return Err(Error::PresetRange(
            "preset cq requires n >= 2 so that deg g >= 1".into(),
        ));
    }
    let f2 = Field::finite(2, 1)?;
    let e = (1u64 << (n - 1)) - 1;
    let g = monomial(&f2, e as usize);
    make_param_curve(2, n, &g)
}

fn monomial(field: &Field, e: usize) -> UniPoly {
    let mut c = vec![field.zero(); e + 1];
    c[e] = field.one();
    UniPoly::from_coeffs(field, c)
}

// ---------------------------------------------------------------------------
// projective plane curves
// ---------------------------------------------------------------------------

/// Which homogeneous coordinate is set to 1 to pass to an affine chart.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Chart {
    X,
    Y,
    Z,
}

impl Chart {
    /// Index of the chart coordinate among `(x, y, z)`.
    pub fn var_index(self) -> usize {
        match self {
            Chart::X => 0,
            Chart::Y => 1,
            Chart::Z => 2,
        }
    }

    /// Indices of the two coordinates that stay affine in this chart.
    pub fn coords(self) -> (usize, usize) {
        match self {
            Chart::X => (1, 2),
            Chart::Y => (0, 2),
            Chart::Z => (0, 1),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Chart::X => "x",
            Chart::Y => "y",
            Chart::Z => "z",
        }
    }

    fn for_index(i: usize) -> Chart {
        match i {
            0 => Chart::X,
            1 => Chart::Y,
            _ => Chart::Z,
        }
    }
}

const VAR_NAMES: [&str; 3] = ["x", "y", "z"];

/// A projective plane curve `F(x, y, z) = 0` with `F` homogeneous.
#[derive(Debug, Clone)]
pub struct ProjPlaneCurve {
    field: Field,
    form: MultiPoly,
    degree: u64,
    reduced: bool,
}

impl ProjPlaneCurve {
    /// Validate a homogeneous form in the variables `x, y, z` and record its
    /// degree and reducedness (checked chart by chart).
    pub fn new(form: MultiPoly) -> Result<ProjPlaneCurve> {
        if form.vars() != VAR_NAMES {
            return Err(Error::Parse(
                "projective plane curves use the variables x, y, z".into(),
            ));
        }
        if form.is_zero() || form.is_constant() {
            return Err(Error::Parse("curve form must be nonconstant".into()));
        }
        if !form.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let degree = form.total_degree().unwrap();
        let field = form.field().clone();
        let mut reduced = true;
        for chart in [Chart::X, Chart::Y, Chart::Z] {
            let f = form.dehomogenize(chart.var_index());
            let (a, b) = chart.coords();
            let pd = f.derivative(a).gcd(&f.derivative(b));
            if !f.gcd(&pd).is_constant() {
                reduced = false;
            }
        }
        Ok(ProjPlaneCurve {
            field,
            form,
            degree,
            reduced,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// The defining homogeneous form.
    pub fn form(&self) -> &MultiPoly {
        &self.form
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    /// Whether the form is squarefree (no repeated component).
    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// The affine equation obtained by setting the chart coordinate to 1.
    /// The result keeps all three variable slots; the chart variable is unused.
    pub fn chart(&self, chart: Chart) -> MultiPoly {
        self.form.dehomogenize(chart.var_index())
    }

    /// Build a validated point on this curve from homogeneous coordinates
    /// over `coord_field`, computing its multiplicity.
    pub fn point(&self, coord_field: &Field, coords: [Coef; 3]) -> Result<CurvePoint> {
        let coords = canonicalize_coords(coord_field, coords)?;
        let (pfield, pcoords) = minimize_field(coord_field, coords)?;
        let k = pfield.extension_degree();
        let mut pt = CurvePoint {
            field: pfield,
            coords: pcoords,
            k,
            multiplicity: 0,
        };
        pt.multiplicity = germ_at(self, &pt)?.0.min_total_degree().unwrap() as u32;
        Ok(pt)
    }
}

/// A point of the projective plane with canonical coordinates: the first
/// nonzero coordinate equals 1, and the coordinate field is the smallest one
/// containing all three coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvePoint {
    field: Field,
    coords: [Coef; 3],
    k: u32,
    multiplicity: u32,
}

impl CurvePoint {
    /// The minimal coordinate field.
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Homogeneous coordinates, first nonzero coordinate scaled to 1.
    pub fn coords(&self) -> &[Coef; 3] {
        &self.coords
    }

    /// Degree of the minimal coordinate field over the prime field.
    pub fn k(&self) -> u32 {
        self.k
    }

    /// Multiplicity of the curve at this point (1 at a smooth point).
    pub fn multiplicity(&self) -> u32 {
        self.multiplicity
    }

    /// Chart in which the point's pivot coordinate equals 1.
    pub fn pivot_chart(&self) -> Chart {
        for i in 0..3 {
            if !self.field.is_zero(&self.coords[i]) {
                return Chart::for_index(i);
            }
        }
        unreachable!("point coordinates are not all zero")
    }

    /// Field-independent dedup/sort key: `(k, coordinate codes)`.
    pub fn key(&self) -> (u32, [u32; 3]) {
        (
            self.k,
            [
                coef_code(&self.coords[0]),
                coef_code(&self.coords[1]),
                coef_code(&self.coords[2]),
            ],
        )
    }

    /// Image under the `p`-power Frobenius applied to each coordinate.
    pub fn frobenius(&self) -> CurvePoint {
        let coords = [
            self.field.frobenius(&self.coords[0]),
            self.field.frobenius(&self.coords[1]),
            self.field.frobenius(&self.coords[2]),
        ];
        CurvePoint {
            field: self.field.clone(),
            coords,
            k: self.k,
            multiplicity: self.multiplicity,
        }
    }

    /// Human-readable `(a : b : c)` form.
    pub fn display(&self) -> String {
        format!(
            "({} : {} : {})",
            self.field.coef_text(&self.coords[0]),
            self.field.coef_text(&self.coords[1]),
            self.field.coef_text(&self.coords[2]),
        )
    }
}

fn coef_code(c: &Coef) -> u32 {
    match c {
        Coef::Fin(code) => *code,
        Coef::Rat(_) => unreachable!("finite-field coordinates expected"),
    }
}

fn canonicalize_coords(field: &Field, coords: [Coef; 3]) -> Result<[Coef; 3]> {
    let pivot = coords
        .iter()
        .find(|c| !field.is_zero(c))
        .ok_or_else(|| Error::Parse("point coordinates are all zero".into()))?;
    let inv = field.inv(pivot)?;
    Ok([
        field.mul(&coords[0], &inv),
        field.mul(&coords[1], &inv),
        field.mul(&coords[2], &inv),
    ])
}

/// Move canonical coordinates into the smallest subfield containing them.
fn minimize_field(field: &Field, coords: [Coef; 3]) -> Result<(Field, [Coef; 3])> {
    if field.is_rational() {
        return Ok((field.clone(), coords));
    }
    let k = field.extension_degree();
    let mut k_min = 1u32;
    for c in &coords {
        k_min = k_min.lcm(&field.minimal_subfield_degree(c));
    }
    if k_min == k {
        return Ok((field.clone(), coords));
    }
    let small = Field::finite_with_bound(field.characteristic(), k_min, u64::MAX)?;
    let emb = Embedding::new(&small, field)?;
    // Invert the embedding on the subfield by table lookup.
    let mut back: BTreeMap<u32, Coef> = BTreeMap::new();
    for a in small.enumerate() {
        back.insert(coef_code(&emb.apply(&a)), a);
    }
    let mut out = [small.zero(), small.zero(), small.zero()];
    for (i, c) in coords.iter().enumerate() {
        out[i] = back
            .get(&coef_code(c))
            .cloned()
            .ok_or_else(|| Error::Parse("coordinate not in claimed subfield".into()))?;
    }
    Ok((small, out))
}

fn embed_or_identity(from: &Field, to: &Field) -> Result<Embedding> {
    if from == to {
        Ok(Embedding::identity(from))
    } else {
        Embedding::new(from, to)
    }
}

// ---------------------------------------------------------------------------
// implicitization
// ---------------------------------------------------------------------------

/// Result of eliminating the parameter from a parametrized curve.
#[derive(Debug, Clone)]
pub struct Implicitization {
    /// The reduced projective closure of the image.
    pub curve: ProjPlaneCurve,
    /// Number of `p`-th roots extracted from the raw eliminant
    /// (inseparability of the parametrization).
    pub pth_roots_taken: u32,
    /// The exponent `e` with raw eliminant `= c · (reduced form)^e` after
    /// `p`-th root extraction.
    pub residual_power: u32,
}

/// Eliminate `t` from `x = x(t), y = y(t)` by a resultant and reduce the
/// output to the squarefree equation of the image curve.
pub fn implicitize(c: &ParamCurve) -> Result<Implicitization> {
    let field = c.field.clone();
    let vars = ["t", "x", "y"];
    let xt = MultiPoly::from_univar(&c.x, 0, &field, &vars);
    let yt = MultiPoly::from_univar(&c.y, 0, &field, &vars);
    let fx = xt.sub(&MultiPoly::var(&field, &vars, "x")?);
    let fy = yt.sub(&MultiPoly::var(&field, &vars, "y")?);
    let mut e = resultant(&fx, &fy, 0)?;
    if e.is_constant() {
        return Err(Error::DegenerateResultant);
    }

    // Strip inseparable powers, then the residual power of the reduced form.
    let mut pth_roots_taken = 0u32;
    while let Ok(root) = e.pth_power_root() {
        e = root;
        pth_roots_taken += 1;
    }
    let pd = e.derivative(1).gcd(&e.derivative(2));
    let rep = e.gcd(&pd);
    let reduced = if rep.is_constant() {
        e.clone()
    } else {
        e.divide_exact(&rep)?
    };
    let mut residual_power = 0u32;
    let mut rest = e;
    while !rest.is_constant() {
        rest = rest.divide_exact(&reduced)?;
        residual_power += 1;
    }

    let affine = reduced.normalize_monic().remove_var(0)?;
    let affine = affine.extend_var("z")?;
    let d = affine.total_degree().ok_or(Error::DegenerateResultant)?;
    let form = affine.homogenize(2, d)?;
    let curve = ProjPlaneCurve::new(form)?;
    if let Some(fam) = &c.family {
        let expect = fam.q.max(field.characteristic() * fam.g.degree().unwrap() as u64);
        assert_eq!(
            curve.degree(),
            expect,
            "implicit degree must match the family formula"
        );
    }
    Ok(Implicitization {
        curve,
        pth_roots_taken,
        residual_power,
    })
}

// ---------------------------------------------------------------------------
// singular points with completeness certificate
// ---------------------------------------------------------------------------

/// What became of one irreducible factor of a chartwise eliminant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorOutcome {
    /// All of the factor's roots lie within the searched extension range and
    /// each was visited; `points` singular points were found above them.
    RootsVisited { points: usize },
    /// Specializing at a root in the factor's splitting field left the
    /// remaining equations with no common solution, so no singular point of
    /// the curve projects onto this factor.
    CertifiedAbsent,
}

/// Disposition of one irreducible eliminant factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorRecord {
    pub degree: usize,
    pub outcome: FactorOutcome,
}

/// One chartwise elimination, with the fate of every eliminant factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminantRecord {
    pub chart: Chart,
    /// Variable eliminated by the resultants.
    pub eliminated: String,
    /// Variable of the eliminant.
    pub kept: String,
    pub eliminant_degree: usize,
    pub factors: Vec<FactorRecord>,
}

/// Degree-accounting evidence that no singular point was missed: every
/// irreducible factor of every chartwise eliminant is either visited or
/// certified absent, and the two eliminations of each chart agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletenessCertificate {
    pub k_max: u32,
    pub eliminants: Vec<EliminantRecord>,
    pub complete: bool,
    pub cross_chart_consistent: bool,
}

/// The singular points of a curve together with their Frobenius orbits and
/// the completeness certificate of the search.
#[derive(Debug, Clone)]
pub struct SingularLocus {
    pub points: Vec<CurvePoint>,
    /// Indices into `points`, grouped into Frobenius orbits.
    pub orbits: Vec<Vec<usize>>,
    pub certificate: CompletenessCertificate,
}

/// Find every singular point of `c` over extensions of degree at most
/// `k_max` of the prime field, or fail with a certificate error naming the
/// extension degree that would be required.
pub fn singular_points(c: &ProjPlaneCurve, k_max: u32) -> Result<SingularLocus> {
    if c.field.is_rational() {
        return Err(Error::NumberFieldNeeded);
    }
    if k_max < 1 {
        return Err(Error::PresetRange("k_max must be at least 1".into()));
    }
    if !c.reduced {
        return Err(Error::NotReduced);
    }

    let mut all: PointSet = BTreeMap::new();
    let mut chart_sets: Vec<(Chart, PointSet)> = Vec::new();
    let mut eliminants = Vec::new();
    for chart in [Chart::X, Chart::Y, Chart::Z] {
        let (set, recs) = chart_singular_points(c, chart, k_max)?;
        for (key, pt) in &set {
            all.entry(*key).or_insert_with(|| pt.clone());
        }
        chart_sets.push((chart, set));
        eliminants.extend(recs);
    }

    // Cross-chart consistency: a point visible in a chart must be found there.
    let mut consistent = true;
    for pt in all.values() {
        for (chart, set) in &chart_sets {
            let visible = !pt.field.is_zero(&pt.coords[chart.var_index()]);
            if visible && !set.contains_key(&pt.key()) {
                consistent = false;
            }
        }
    }
    if !consistent {
        return Err(Error::CertificateFailure(
            "chartwise searches disagree about a singular point".into(),
        ));
    }

    let points: Vec<CurvePoint> = all.into_values().collect();
    let index: BTreeMap<(u32, [u32; 3]), usize> =
        points.iter().enumerate().map(|(i, p)| (p.key(), i)).collect();
    let mut orbits = Vec::new();
    let mut seen = vec![false; points.len()];
    for i in 0..points.len() {
        if seen[i] {
            continue;
        }
        let mut orbit = vec![i];
        seen[i] = true;
        let mut cur = points[i].frobenius();
        while cur.key() != points[i].key() {
            let j = *index
                .get(&cur.key())
                .expect("Frobenius conjugate of a singular point is singular");
            if !seen[j] {
                orbit.push(j);
                seen[j] = true;
            }
            cur = cur.frobenius();
        }
        orbits.push(orbit);
    }

    Ok(SingularLocus {
        points,
        orbits,
        certificate: CompletenessCertificate {
            k_max,
            eliminants,
            complete: true,
            cross_chart_consistent: true,
        },
    })
}

type PointSet = BTreeMap<(u32, [u32; 3]), CurvePoint>;

fn chart_singular_points(
    c: &ProjPlaneCurve,
    chart: Chart,
    k_max: u32,
) -> Result<(PointSet, Vec<EliminantRecord>)> {
    let (a, b) = chart.coords();
    let f = c.chart(chart);
    let fa = f.derivative(a);
    let fb = f.derivative(b);
    if fa.is_zero() && fb.is_zero() {
        // Both partials vanish identically only for an inseparable power.
        return Err(Error::NotReduced);
    }
    let mut gens = vec![f.clone()];
    for h in [fa, fb] {
        if !h.is_zero() {
            gens.push(h);
        }
    }

    let mut records = Vec::new();
    // A nonzero constant among the generators empties the chart at once.
    if gens.iter().any(|h| h.is_constant()) {
        for (elim, keep) in [(b, a), (a, b)] {
            records.push(EliminantRecord {
                chart,
                eliminated: VAR_NAMES[elim].into(),
                kept: VAR_NAMES[keep].into(),
                eliminant_degree: 0,
                factors: Vec::new(),
            });
        }
        return Ok((PointSet::new(), records));
    }

    let mut sets: Vec<PointSet> = Vec::new();
    for (elim, keep) in [(b, a), (a, b)] {
        let mut eliminant: Option<MultiPoly> = None;
        for i in 0..gens.len() {
            for j in (i + 1)..gens.len() {
                let r = resultant(&gens[i], &gens[j], elim)?;
                if r.is_zero() {
                    continue; // the pair shares a factor; other pairs constrain
                }
                eliminant = Some(match eliminant {
                    None => r,
                    Some(e) => e.gcd(&r),
                });
            }
        }
        // With no usable resultant the candidates cannot be confined.
        let e = eliminant.ok_or_else(|| {
            Error::CertificateFailure(format!(
                "chart {}: all pairwise resultants vanish",
                chart.name()
            ))
        })?;
        let eu = if gens.iter().all(|h| h.degree_in(elim) == 0) {
            // Nothing actually involves the eliminated variable: the
            // generators themselves confine the kept coordinate.
            let mut g = gens[0].clone();
            for h in &gens[1..] {
                g = g.gcd(h);
            }
            g.as_univar(keep)?
        } else {
            e.as_univar(keep)?
        };

        let mut set = PointSet::new();
        let mut factors = Vec::new();
        if !eu.is_constant() {
            for (phi, _mult) in factor(&eu)? {
                let rec = visit_factor(c, chart, elim, keep, &gens, &phi, k_max, &mut set)?;
                factors.push(rec);
            }
        }
        records.push(EliminantRecord {
            chart,
            eliminated: VAR_NAMES[elim].into(),
            kept: VAR_NAMES[keep].into(),
            eliminant_degree: eu.degree().unwrap_or(0),
            factors,
        });
        sets.push(set);
    }

    if sets[0].keys().ne(sets[1].keys()) {
        return Err(Error::CertificateFailure(format!(
            "chart {}: the two elimination directions disagree",
            chart.name()
        )));
    }
    Ok((sets.swap_remove(0), records))
}

/// Visit or certify one irreducible factor `phi` of a chartwise eliminant.
#[allow(clippy::too_many_arguments)]
fn visit_factor(
    c: &ProjPlaneCurve,
    chart: Chart,
    elim: usize,
    keep: usize,
    gens: &[MultiPoly],
    phi: &UniPoly,
    k_max: u32,
    set: &mut PointSet,
) -> Result<FactorRecord> {
    let field = &c.field;
    let p = field.characteristic();
    let k0 = field.extension_degree();
    let d = phi.degree().unwrap();
    let k_def = k0 * d as u32;

    let kfield = if k_def == k0 {
        field.clone()
    } else {
        Field::finite(p, k_def).map_err(|_| {
            Error::CertificateFailure(format!(
                "cannot build F_{p}^{k_def} to examine an eliminant factor of degree {d}"
            ))
        })?
    };
    let emb = embed_or_identity(field, &kfield)?;
    let phi_k = emb.apply_poly(phi);
    let roots = roots_in_field(&phi_k)?;
    assert_eq!(roots.len(), d, "an irreducible factor splits in its root field");

    let gens_k: Vec<MultiPoly> = gens
        .iter()
        .map(|h| h.map_field(&kfield, |c| emb.apply(c)))
        .collect();

    if k_def <= k_max {
        let mut points_found = 0usize;
        for (u0, _) in &roots {
            let mut fiber: Option<UniPoly> = None;
            for h in &gens_k {
                let s = h.subst_coef(keep, u0).as_univar(elim)?;
                fiber = Some(match fiber {
                    None => s,
                    Some(g) => g.gcd(&s),
                });
            }
            let fiber = fiber.unwrap();
            if fiber.is_zero() {
                return Err(Error::NotReduced);
            }
            if fiber.is_constant() {
                continue; // candidate coordinate carries no singular point
            }
            for (psi, _m) in factor(&fiber)? {
                let e2 = psi.degree().unwrap();
                let k_tot = k_def * e2 as u32;
                if k_tot > k_max {
                    return Err(Error::CertificateFailure(format!(
                        "a singular point needs extension degree {k_tot} > k_max = {k_max} \
                         (chart {}, eliminant factor degree {d}, fiber factor degree {e2})",
                        chart.name()
                    )));
                }
                let lfield = if k_tot == k_def {
                    kfield.clone()
                } else {
                    Field::finite(p, k_tot)?
                };
                let emb2 = embed_or_identity(&kfield, &lfield)?;
                let psi_l = emb2.apply_poly(&psi);
                for (v0, _) in roots_in_field(&psi_l)? {
                    let mut coords = [lfield.zero(), lfield.zero(), lfield.zero()];
                    coords[chart.var_index()] = lfield.one();
                    coords[keep] = emb2.apply(u0);
                    coords[elim] = v0;
                    let pt = c.point(&lfield, coords)?;
                    assert!(pt.multiplicity >= 2, "located points are singular");
                    set.insert(pt.key(), pt);
                    points_found += 1;
                }
            }
        }
        Ok(FactorRecord {
            degree: d,
            outcome: FactorOutcome::RootsVisited {
                points: points_found,
            },
        })
    } else {
        // Certify absence by specializing at a single root; the factor's
        // roots are Galois conjugate, so one specialization decides for all.
        let (u0, _) = &roots[0];
        let mut fiber: Option<UniPoly> = None;
        for h in &gens_k {
            let s = h.subst_coef(keep, u0).as_univar(elim)?;
            fiber = Some(match fiber {
                None => s,
                Some(g) => g.gcd(&s),
            });
        }
        let fiber = fiber.unwrap();
        if fiber.is_zero() {
            return Err(Error::NotReduced);
        }
        if fiber.is_constant() {
            Ok(FactorRecord {
                degree: d,
                outcome: FactorOutcome::CertifiedAbsent,
            })
        } else {
            Err(Error::CertificateFailure(format!(
                "a singular point lies over an eliminant factor of degree {d}, beyond \
                 k_max = {k_max} (needs extension degree at least {k_def})"
            )))
        }
    }
}

// ---------------------------------------------------------------------------
// local analysis
// ---------------------------------------------------------------------------

/// Translate the curve to a point and return the local equation at the
/// origin of the point's pivot chart, as a polynomial in the two chart
/// variables over the compositum of the curve and coordinate fields.
pub fn germ_at(c: &ProjPlaneCurve, pt: &CurvePoint) -> Result<(MultiPoly, Chart)> {
    let chart = pt.pivot_chart();
    let (a, b) = chart.coords();
    let work = compositum(&c.field, &pt.field)?;
    let emb_c = embed_or_identity(&c.field, &work)?;
    let emb_p = embed_or_identity(&pt.field, &work)?;
    let f = c
        .form
        .map_field(&work, |x| emb_c.apply(x))
        .dehomogenize(chart.var_index());
    let mut subs = Vec::new();
    let va = MultiPoly::var(&work, &VAR_NAMES, VAR_NAMES[a])?;
    let vb = MultiPoly::var(&work, &VAR_NAMES, VAR_NAMES[b])?;
    let ca = MultiPoly::constant(&work, &VAR_NAMES, emb_p.apply(&pt.coords[a]));
    let cb = MultiPoly::constant(&work, &VAR_NAMES, emb_p.apply(&pt.coords[b]));
    subs.push((VAR_NAMES[a], va.add(&ca)));
    subs.push((VAR_NAMES[b], vb.add(&cb)));
    let g = f.substitute(&subs)?;
    if !work.is_zero(&g.coef_of(&[0, 0, 0])) {
        return Err(Error::PointNotOnCurve);
    }
    let g = g.remove_var(chart.var_index())?;
    Ok((g, chart))
}

fn compositum(a: &Field, b: &Field) -> Result<Field> {
    if a.is_rational() || b.is_rational() {
        if a == b {
            return Ok(a.clone());
        }
        return Err(Error::FieldMismatch);
    }
    if a.characteristic() != b.characteristic() {
        return Err(Error::FieldMismatch);
    }
    let k = a.extension_degree().lcm(&b.extension_degree());
    if k == a.extension_degree() {
        return Ok(a.clone());
    }
    if k == b.extension_degree() {
        return Ok(b.clone());
    }
    Field::finite(a.characteristic(), k)
}

/// Order of vanishing of the curve's local equation at a point.
pub fn multiplicity_at(c: &ProjPlaneCurve, pt: &CurvePoint) -> Result<u32> {
    let (germ, _) = germ_at(c, pt)?;
    Ok(germ.min_total_degree().unwrap() as u32)
}

/// The curve's points on the line `z = 0`, over extensions of degree at most
/// `k_max`; multiplicities are curve multiplicities at those points.
pub fn points_at_infinity(c: &ProjPlaneCurve, k_max: u32) -> Result<Vec<CurvePoint>> {
    if c.field.is_rational() {
        return Err(Error::NumberFieldNeeded);
    }
    let field = &c.field;
    let restricted = c.form.subst_coef(2, &field.zero());
    if restricted.is_zero() {
        return Err(Error::Parse(
            "the line z = 0 is a component of the curve".into(),
        ));
    }
    let k0 = field.extension_degree();
    let mut out: BTreeMap<(u32, [u32; 3]), CurvePoint> = BTreeMap::new();
    // Points with y != 0 correspond to roots of the y = 1 slice.
    let slice = restricted.subst_coef(1, &field.one());
    let g = slice.as_univar(0)?;
    if !g.is_constant() {
        for (phi, _mult) in factor(&g)? {
            let d = phi.degree().unwrap();
            let k_def = k0 * d as u32;
            if k_def > k_max {
                continue;
            }
            let kfield = if k_def == k0 {
                field.clone()
            } else {
                Field::finite(field.characteristic(), k_def)?
            };
            let emb = embed_or_identity(field, &kfield)?;
            for (x0, _) in roots_in_field(&emb.apply_poly(&phi))? {
                let pt = c.point(&kfield, [x0, kfield.one(), kfield.zero()])?;
                out.insert(pt.key(), pt);
            }
        }
    }
    // The point (1 : 0 : 0) lies on the curve iff the form vanishes there.
    let at_x = c.form.eval(&[field.one(), field.zero(), field.zero()]);
    if field.is_zero(&at_x) {
        let pt = c.point(field, [field.one(), field.zero(), field.zero()])?;
        out.insert(pt.key(), pt);
    }
    Ok(out.into_values().collect())
}

// ---------------------------------------------------------------------------
// embedding and genus bookkeeping
// ---------------------------------------------------------------------------

/// Outcome of the closed-embedding tests for a parametrized curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EmbeddingReport {
    /// The derivative vector `(x'(t), y'(t))` never vanishes.
    pub immersion: bool,
    /// Distinct parameter values map to distinct points (over the algebraic
    /// closure).
    pub injective: bool,
}

/// Decide whether `t -> (x(t), y(t))` is an immersion and whether it is
/// injective on points of the algebraic closure.
pub fn embedding_check(c: &ParamCurve) -> Result<EmbeddingReport> {
    let field = &c.field;
    // Immersion: gcd(x', y') is a nonzero constant.
    let dx = c.x.derivative();
    let dy = c.y.derivative();
    let immersion = if dx.is_zero() && dy.is_zero() {
        false
    } else {
        dx.gcd(&dy).is_constant()
    };

    // Injectivity: the identifications ideal (x(s) − x(t), y(s) − y(t)) may
    // vanish only on the diagonal s = t.
    let vars = ["s", "t"];
    let fs = diff_poly(&c.x, field, &vars)?;
    let gs = diff_poly(&c.y, field, &vars)?;
    let injective = if fs.is_zero() && gs.is_zero() {
        false // a constant map identifies everything
    } else {
        let gcd = fs.gcd(&gs);
        if !is_power_of_diagonal(&gcd)? {
            false
        } else {
            let f1 = if gcd.is_constant() { fs.clone() } else { fs.divide_exact(&gcd)? };
            let g1 = if gcd.is_constant() { gs.clone() } else { gs.divide_exact(&gcd)? };
            !has_off_diagonal_zero(&f1, &g1, field)?
        }
    };
    Ok(EmbeddingReport {
        immersion,
        injective,
    })
}

/// `h(s) − h(t)` in the polynomial ring on `(s, t)`.
fn diff_poly(h: &UniPoly, field: &Field, vars: &[&str]) -> Result<MultiPoly> {
    let hs = MultiPoly::from_univar(h, 0, field, vars);
    let ht = MultiPoly::from_univar(h, 1, field, vars);
    Ok(hs.sub(&ht))
}

/// Whether a polynomial in `(s, t)` equals `c · (s − t)^e`.
fn is_power_of_diagonal(g: &MultiPoly) -> Result<bool> {
    if g.is_zero() {
        return Ok(false);
    }
    let field = g.field().clone();
    let vars = ["s", "t"];
    let diag = MultiPoly::var(&field, &vars, "s")?.sub(&MultiPoly::var(&field, &vars, "t")?);
    let mut h = g.clone();
    while !h.is_constant() {
        match h.divide_exact(&diag) {
            Ok(q) => h = q,
            Err(_) => return Ok(false),
        }
    }
    Ok(true)
}

/// Whether the coprime pair `(f1, g1)` in `(s, t)` has a common zero with
/// `s != t` over the algebraic closure.
fn has_off_diagonal_zero(f1: &MultiPoly, g1: &MultiPoly, field: &Field) -> Result<bool> {
    if f1.is_constant() || g1.is_constant() {
        // A nonzero constant forbids common zeros entirely.
        if (f1.is_constant() && !f1.is_zero()) || (g1.is_constant() && !g1.is_zero()) {
            return Ok(false);
        }
    }
    // Substitute s = t + u and remove powers of u (the diagonal).
    let uvars = ["u", "t"];
    let tu = MultiPoly::var(field, &uvars, "t")?.add(&MultiPoly::var(field, &uvars, "u")?);
    let tt = MultiPoly::var(field, &uvars, "t")?;
    let shift = |h: &MultiPoly| -> Result<MultiPoly> {
        let moved = MultiPoly::from_terms(
            field,
            &uvars,
            h.terms()
                .map(|(m, c)| (vec![m.0[0], m.0[1]], c.clone()))
                .collect(),
        );
        let s = moved.substitute(&[("u", tu.clone()), ("t", tt.clone())])?;
        let v = s.ord_in(0);
        s.div_var_power(0, v)
    };
    let fh = shift(f1)?;
    let gh = shift(g1)?;

    // Candidate u-values off the diagonal.
    let cand = if fh.degree_in(1) == 0 && gh.degree_in(1) == 0 {
        fh.as_univar(0)?.gcd(&gh.as_univar(0)?)
    } else if fh.degree_in(1) == 0 {
        fh.as_univar(0)?
    } else if gh.degree_in(1) == 0 {
        gh.as_univar(0)?
    } else {
        resultant(&fh, &gh, 1)?.as_univar(0)?
    };
    if cand.is_zero() {
        // Coprime inputs cannot share a curve of zeros; a vanishing
        // eliminant would contradict that.
        return Err(Error::DegenerateResultant);
    }
    let mut cand = cand;
    let ord = cand.coeffs().iter().take_while(|c| field.is_zero(c)).count();
    if ord > 0 {
        let trimmed: Vec<Coef> = cand.coeffs()[ord..].to_vec();
        cand = UniPoly::from_coeffs(field, trimmed);
    }
    if cand.is_constant() {
        return Ok(false);
    }
    if field.is_rational() {
        return Err(Error::NumberFieldNeeded);
    }
    let k0 = field.extension_degree();
    let p = field.characteristic();
    for (chi, _mult) in factor(&cand)? {
        let d = chi.degree().unwrap();
        let kfield = if d == 1 {
            field.clone()
        } else {
            Field::finite(p, k0 * d as u32)?
        };
        let emb = embed_or_identity(field, &kfield)?;
        let (u0, _) = roots_in_field(&emb.apply_poly(&chi))?[0].clone();
        if kfield.is_zero(&u0) {
            continue;
        }
        let fu = fh.map_field(&kfield, |c| emb.apply(c)).subst_coef(0, &u0);
        let gu = gh.map_field(&kfield, |c| emb.apply(c)).subst_coef(0, &u0);
        let a = fu.as_univar(1)?;
        let b = gu.as_univar(1)?;
        let h = a.gcd(&b);
        if h.is_zero() || !h.is_constant() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Genus bookkeeping from the degree and the local `δ` contributions of the
/// singular points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenusReport {
    pub arithmetic_genus: u64,
    pub delta_sum: u64,
    pub geometric_genus: i64,
}

/// `(d−1)(d−2)/2 − Σ δ`; the curve is rational exactly when this is zero and
/// the parametrization is injective.
pub fn genus_check(c: &ProjPlaneCurve, deltas: &[u64]) -> GenusReport {
    let d = c.degree;
    let pa = (d.saturating_sub(1)) * (d.saturating_sub(2)) / 2;
    let ds: u64 = deltas.iter().sum();
    GenusReport {
        arithmetic_genus: pa,
        delta_sum: ds,
        geometric_genus: pa as i64 - ds as i64,
    }
}

// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Field {
        Field::finite(2, 1).unwrap()
    }

    fn f3() -> Field {
        Field::finite(3, 1).unwrap()
    }

    fn f5() -> Field {
        Field::finite(5, 1).unwrap()
    }

    fn uni(field: &Field, text: &str) -> UniPoly {
        MultiPoly::parse(field, &["t"], text)
            .unwrap()
            .as_univar(0)
            .unwrap()
    }

    #[test]
    fn family_presets_record_invariants() {
        let c = c_q2(2).unwrap();
        let fam = c.family().unwrap();
        assert_eq!(fam.q, 4);
        assert_eq!(fam.g.degree(), Some(3));
        assert_eq!(fam.r, 2);

        let c = c_q2(1).unwrap();
        let fam = c.family().unwrap();
        assert_eq!(fam.q, 2);
        assert_eq!(fam.g.degree(), Some(2));
        assert_eq!(fam.r, 2);

        let c = c_q(3).unwrap();
        let fam = c.family().unwrap();
        assert_eq!(fam.q, 8);
        assert_eq!(fam.g.degree(), Some(3));
        assert_eq!(fam.r, -2);

        assert!(matches!(c_q(1), Err(Error::PresetRange(_))));
        assert!(matches!(c_q2(0), Err(Error::PresetRange(_))));
        assert!(matches!(
            make_param_curve(2, 1, &UniPoly::zero(&f2())),
            Err(Error::ZeroG)
        ));
    }

    #[test]
    fn implicitize_even_family_known_forms() {
        let done = implicitize(&c_q2(2).unwrap()).unwrap();
        let expect =
            MultiPoly::parse(&f2(), &["x", "y", "z"], "x^6 + x*z^5 + y^4*z^2").unwrap();
        assert_eq!(done.curve.form(), &expect);
        assert_eq!(done.curve.degree(), 6);
        assert!(done.curve.is_reduced());

        let done = implicitize(&c_q2(1).unwrap()).unwrap();
        let expect =
            MultiPoly::parse(&f2(), &["x", "y", "z"], "x^4 + x*z^3 + y^2*z^2").unwrap();
        assert_eq!(done.curve.form(), &expect);

        for n in 1..=4u32 {
            let done = implicitize(&c_q2(n).unwrap()).unwrap();
            assert_eq!(done.curve.degree(), (1u64 << n) + 2);
        }
    }

    #[test]
    fn implicitize_power_family_chart_form() {
        let done = implicitize(&c_q(3).unwrap()).unwrap();
        assert_eq!(done.curve.degree(), 8);
        let chart_x = done.curve.chart(Chart::X);
        let expect = MultiPoly::parse(&f2(), &["x", "y", "z"], "y^8 + z^2 + z^7").unwrap();
        assert_eq!(chart_x, expect);
        for n in 2..=4u32 {
            let done = implicitize(&c_q(n).unwrap()).unwrap();
            assert_eq!(done.curve.degree(), 1u64 << n);
        }
    }

    #[test]
    fn implicit_affine_part_matches_parametrization_equation() {
        for c in [
            c_q2(1).unwrap(),
            c_q2(2).unwrap(),
            c_q2(3).unwrap(),
            c_q(2).unwrap(),
            c_q(3).unwrap(),
        ] {
            let fam = c.family().unwrap();
            let field = c.field().clone();
            let done = implicitize(&c).unwrap();
            // Expected affine equation y^q − g(x^p) − x (char 2 signs).
            let p = field.characteristic() as usize;
            let vars = ["x", "y", "z"];
            let mut terms = vec![(vec![0, fam.q as u32, 0], field.one())];
            for (i, co) in fam.g.coeffs().iter().enumerate() {
                if !field.is_zero(co) {
                    terms.push((vec![(i * p) as u32, 0, 0], field.neg(co)));
                }
            }
            terms.push((vec![1, 0, 0], field.neg(&field.one())));
            let expect = MultiPoly::from_terms(&field, &vars, terms).normalize_monic();
            assert_eq!(done.curve.chart(Chart::Z).normalize_monic(), expect);
            assert_eq!(done.pth_roots_taken, 0);
            assert_eq!(done.residual_power, 1);
        }
    }

    #[test]
    fn implicit_form_vanishes_along_the_parametrization() {
        let big = Field::finite(2, 6).unwrap();
        for c in [c_q2(2).unwrap(), c_q(2).unwrap()] {
            let done = implicitize(&c).unwrap();
            let emb = Embedding::new(c.field(), &big).unwrap();
            let x = emb.apply_poly(c.x_poly());
            let y = emb.apply_poly(c.y_poly());
            let form = done.curve.form().map_field(&big, |co| emb.apply(co));
            let mut tested = 0;
            for t in big.enumerate() {
                let v = form.eval(&[x.eval(&t), y.eval(&t), big.one()]);
                assert!(big.is_zero(&v));
                tested += 1;
            }
            assert!(tested >= 50);
        }
    }

    #[test]
    fn unique_singular_point_even_family() {
        for n in [1u32, 2] {
            let done = implicitize(&c_q2(n).unwrap()).unwrap();
            let locus = singular_points(&done.curve, DEFAULT_K_MAX).unwrap();
            assert_eq!(locus.points.len(), 1);
            let pt = &locus.points[0];
            assert_eq!(pt.k(), 1);
            assert_eq!(pt.multiplicity(), 2);
            let f = pt.field().clone();
            assert_eq!(pt.coords(), &[f.zero(), f.one(), f.zero()]);
            assert_eq!(locus.orbits, vec![vec![0]]);
            assert!(locus.certificate.complete);
        }
    }

    #[test]
    fn unique_singular_point_power_family() {
        let done = implicitize(&c_q(3).unwrap()).unwrap();
        let locus = singular_points(&done.curve, DEFAULT_K_MAX).unwrap();
        assert_eq!(locus.points.len(), 1);
        let pt = &locus.points[0];
        let f = pt.field().clone();
        assert_eq!(pt.coords(), &[f.one(), f.zero(), f.zero()]);
        assert_eq!(pt.multiplicity(), 2);
        assert!(locus.certificate.complete);
    }

    #[test]
    fn smooth_conic_has_empty_singular_locus() {
        let form = MultiPoly::parse(&f3(), &["x", "y", "z"], "x^2 + y*z").unwrap();
        let curve = ProjPlaneCurve::new(form).unwrap();
        assert!(curve.is_reduced());
        let locus = singular_points(&curve, DEFAULT_K_MAX).unwrap();
        assert!(locus.points.is_empty());
        assert!(locus.certificate.complete);
    }

    #[test]
    fn multiplicity_examples() {
        // q = 2, g = u^3 gives r = 4 and a multiplicity-4 point at infinity.
        let c = make_param_curve(2, 1, &uni(&f2(), "t^3")).unwrap();
        assert_eq!(c.family().unwrap().r, 4);
        let done = implicitize(&c).unwrap();
        let f = done.curve.field().clone();
        let inf = done
            .curve
            .point(&f, [f.zero(), f.one(), f.zero()])
            .unwrap();
        assert_eq!(multiplicity_at(&done.curve, &inf).unwrap(), 4);

        // A smooth point has multiplicity 1.
        let done = implicitize(&c_q2(2).unwrap()).unwrap();
        let f = done.curve.field().clone();
        let smooth = done.curve.point(&f, [f.one(), f.zero(), f.one()]).unwrap();
        assert_eq!(smooth.multiplicity(), 1);

        // The even family at n = 3 keeps multiplicity 2 at infinity.
        let done = implicitize(&c_q2(3).unwrap()).unwrap();
        let f = done.curve.field().clone();
        let inf = done
            .curve
            .point(&f, [f.zero(), f.one(), f.zero()])
            .unwrap();
        assert_eq!(inf.multiplicity(), 2);

        // Off-curve coordinates are rejected.
        let bad = done.curve.point(&f, [f.one(), f.one(), f.zero()]);
        assert!(matches!(bad, Err(Error::PointNotOnCurve)));
    }

    #[test]
    fn positive_r_grid_has_single_infinity_point_of_multiplicity_r() {
        let mut checked = 0;
        for p in [2u64, 3] {
            let field = Field::finite(p, 1).unwrap();
            let codes: Vec<Vec<i64>> = match p {
                2 => vec![
                    vec![0, 0, 1],
                    vec![1, 0, 1],
                    vec![0, 1, 1],
                    vec![1, 1, 1],
                    vec![0, 0, 0, 1],
                    vec![1, 0, 1, 1],
                    vec![0, 1, 0, 0, 1],
                    vec![1, 1, 0, 1, 1],
                ],
                _ => vec![
                    vec![0, 0, 1],
                    vec![0, 0, 2],
                    vec![1, 0, 1],
                    vec![0, 2, 1],
                    vec![0, 0, 0, 2],
                    vec![1, 2, 0, 1],
                ],
            };
            for g_codes in codes {
                let coeffs: Vec<Coef> = g_codes.iter().map(|&c| field.from_i64(c)).collect();
                let g = UniPoly::from_coeffs(&field, coeffs);
                for n in [1u32, 2] {
                    let c = make_param_curve(p, n, &g).unwrap();
                    let r = c.family().unwrap().r;
                    if r <= 0 {
                        continue;
                    }
                    let done = implicitize(&c).unwrap();
                    let inf = points_at_infinity(&done.curve, DEFAULT_K_MAX).unwrap();
                    assert_eq!(inf.len(), 1, "p={p} n={n}");
                    assert_eq!(inf[0].multiplicity() as i64, r, "p={p} n={n}");
                    let f = inf[0].field().clone();
                    assert_eq!(inf[0].coords(), &[f.zero(), f.one(), f.zero()]);
                    // r > 0 forces p | r, so the point is genuinely singular
                    // and the affine chart is smooth.
                    let locus = singular_points(&done.curve, DEFAULT_K_MAX).unwrap();
                    assert_eq!(locus.points.len(), 1, "p={p} n={n}");
                    assert_eq!(locus.points[0].multiplicity() as i64, r);
                    checked += 1;
                }
            }
        }
        assert!(checked >= 15, "grid exercised {checked} curves");
    }

    #[test]
    fn embedding_check_cases() {
        for n in [1u32, 2, 3] {
            let rep = embedding_check(&c_q2(n).unwrap()).unwrap();
            assert!(rep.immersion && rep.injective);
        }
        let rep = embedding_check(&c_q(2).unwrap()).unwrap();
        assert!(rep.immersion && rep.injective);

        // Cuspidal: not an immersion, still injective.
        let c = ParamCurve::from_pair(uni(&f5(), "t^2"), uni(&f5(), "t^3")).unwrap();
        let rep = embedding_check(&c).unwrap();
        assert!(!rep.immersion);
        assert!(rep.injective);

        // Factors through t^2: neither.
        let c = ParamCurve::from_pair(uni(&f3(), "t^2"), uni(&f3(), "t^4")).unwrap();
        let rep = embedding_check(&c).unwrap();
        assert!(!rep.immersion);
        assert!(!rep.injective);

        // Nodal cubic: immersed but identifies t = 1 and t = −1.
        let c = ParamCurve::from_pair(uni(&f5(), "t^2 - 1"), uni(&f5(), "t^3 - t")).unwrap();
        let rep = embedding_check(&c).unwrap();
        assert!(rep.immersion);
        assert!(!rep.injective);
    }

    #[test]
    fn genus_bookkeeping() {
        let done = implicitize(&c_q2(2).unwrap()).unwrap();
        let rep = genus_check(&done.curve, &[10]);
        assert_eq!(rep.arithmetic_genus, 10);
        assert_eq!(rep.geometric_genus, 0);

        let cubic =
            MultiPoly::parse(&f5(), &["x", "y", "z"], "y^2*z - x^3 - x*z^2").unwrap();
        let curve = ProjPlaneCurve::new(cubic).unwrap();
        let rep = genus_check(&curve, &[]);
        assert_eq!(rep.arithmetic_genus, 1);
        assert_eq!(rep.geometric_genus, 1);
    }

    #[test]
    fn conjugate_singular_points_and_certificate_bounds() {
        // Three concurrent lines: z and the conjugate pair x^2 + x*y + y^2.
        let form =
            MultiPoly::parse(&f2(), &["x", "y", "z"], "z*(x^2 + x*y + y^2)").unwrap();
        let curve = ProjPlaneCurve::new(form).unwrap();
        assert!(curve.is_reduced());

        let locus = singular_points(&curve, 2).unwrap();
        assert_eq!(locus.points.len(), 3);
        let ks: Vec<u32> = locus.points.iter().map(|p| p.k()).collect();
        assert_eq!(ks.iter().filter(|&&k| k == 1).count(), 1);
        assert_eq!(ks.iter().filter(|&&k| k == 2).count(), 2);
        for p in &locus.points {
            assert_eq!(p.multiplicity(), 2);
        }
        let mut sizes: Vec<usize> = locus.orbits.iter().map(|o| o.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2]);

        // With the search cut off below the conjugate pair, the certificate
        // must refuse to claim completeness.
        match singular_points(&curve, 1) {
            Err(Error::CertificateFailure(msg)) => {
                assert!(msg.contains("k_max"), "message: {msg}");
            }
            other => panic!("expected a certificate failure, got {other:?}"),
        }
    }

    #[test]
    fn singular_locus_is_scaling_invariant() {
        let form = MultiPoly::parse(&f3(), &["x", "y", "z"], "y^2*z - x^3").unwrap();
        let curve = ProjPlaneCurve::new(form.clone()).unwrap();
        let scaled = ProjPlaneCurve::new(form.mul_coef(&f3().from_i64(2))).unwrap();
        let a = singular_points(&curve, DEFAULT_K_MAX).unwrap();
        let b = singular_points(&scaled, DEFAULT_K_MAX).unwrap();
        let keys_a: Vec<_> = a.points.iter().map(|p| p.key()).collect();
        let keys_b: Vec<_> = b.points.iter().map(|p| p.key()).collect();
        assert_eq!(keys_a, keys_b);
        assert_eq!(
            a.points.iter().map(|p| p.multiplicity()).collect::<Vec<_>>(),
            b.points.iter().map(|p| p.multiplicity()).collect::<Vec<_>>(),
        );
        assert_eq!(a.certificate, b.certificate);
        // The cuspidal cubic is singular exactly at (0 : 0 : 1).
        assert_eq!(a.points.len(), 1);
        let f = a.points[0].field().clone();
        assert_eq!(a.points[0].coords(), &[f.zero(), f.zero(), f.one()]);
    }

    #[test]
    fn projective_curve_validation() {
        let not_hom = MultiPoly::parse(&f2(), &["x", "y", "z"], "x^2 + y").unwrap();
        assert!(matches!(
            ProjPlaneCurve::new(not_hom),
            Err(Error::NotHomogeneous)
        ));

        let doubled = MultiPoly::parse(&f3(), &["x", "y", "z"], "(x + y)^2 * z").unwrap();
        let curve = ProjPlaneCurve::new(doubled).unwrap();
        assert!(!curve.is_reduced());
        assert!(matches!(
            singular_points(&curve, DEFAULT_K_MAX),
            Err(Error::NotReduced)
        ));
    }

    #[test]
    fn germ_at_infinity_of_even_family() {
        let done = implicitize(&c_q2(2).unwrap()).unwrap();
        let f = done.curve.field().clone();
        let pt = done
            .curve
            .point(&f, [f.zero(), f.one(), f.zero()])
            .unwrap();
        let (germ, chart) = germ_at(&done.curve, &pt).unwrap();
        assert_eq!(chart, Chart::Y);
        let expect = MultiPoly::parse(&f, &["x", "z"], "z^2 + x*z^5 + x^6").unwrap();
        assert_eq!(germ, expect);
    }
}
