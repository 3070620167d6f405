//! Exact coefficient arithmetic: small finite fields and arbitrary-precision
//! rationals behind one handle type.
//!
//! Key items:
//! - [`Field`] — shared handle for either `F_{p^k}` or the rationals `Q`.
//! - [`Coef`] — compact element payload (`u32` code for finite fields,
//!   `BigRational` for the rationals).
//! - [`FieldElement`] — a `(Field, Coef)` pair for API surfaces that hand
//!   elements across module boundaries.
//!
//! Finite fields are table-backed: elements are codes `0..p^k` whose base-`p`
//! digits are the coefficients of the residue polynomial in the generator `a`.
//! The modulus is the lexicographically least monic irreducible of degree `k`
//! (coefficient tuples compared from the highest degree down), verified by
//! exhaustive trial division.  Multiplication uses discrete-log tables built
//! lazily from a primitive element, so products are two lookups and an index
//! addition.  The construction bound `p^k <= 2^20` keeps every table and every
//! enumeration loop in this crate comfortably in memory.

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Default bound on `p^k` for finite-field construction.
pub const DEFAULT_FIELD_BOUND: u64 = 1 << 20;

/// Element payload.  `Fin` codes are base-`p` digit packings of the residue
/// polynomial; `Rat` is an exact rational in lowest terms (enforced by
/// `BigRational` itself).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Coef {
    Fin(u32),
    Rat(BigRational),
}

impl Coef {
    pub fn rat_i64(n: i64) -> Coef {
        Coef::Rat(BigRational::from_integer(BigInt::from(n)))
    }
}

/// Multiplication tables for a finite field: `exp[i] = g^i` and
/// `log[exp[i]] = i` for a primitive element `g`.
struct MulTables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// A concrete finite field `F_{p^k}`.
pub struct FiniteField {
    p: u64,
    k: u32,
    /// Monic modulus, length `k+1`, coefficients in `[0, p)`, low degree first.
    modulus: Vec<u64>,
    size: u64,
    tables: OnceLock<MulTables>,
}

enum FieldRepr {
    Rational,
    Finite(FiniteField),
}

/// Shared, cheaply clonable handle to a coefficient field.
#[derive(Clone)]
pub struct Field(Arc<FieldRepr>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        match (&*self.0, &*other.0) {
            (FieldRepr::Rational, FieldRepr::Rational) => true,
            (FieldRepr::Finite(a), FieldRepr::Finite(b)) => {
                a.p == b.p && a.k == b.k && a.modulus == b.modulus
            }
            _ => false,
        }
    }
}
impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            FieldRepr::Rational => write!(f, "Q"),
            FieldRepr::Finite(ff) => write!(f, "F_{}^{}", ff.p, ff.k),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            FieldRepr::Rational => write!(f, "Q"),
            FieldRepr::Finite(ff) => {
                if ff.k == 1 {
                    write!(f, "F_{}", ff.p)
                } else {
                    write!(f, "F_{}", ff.size)
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// mod-p coefficient-vector helpers (used for modulus search and bootstrap
// multiplication before tables exist)
// ---------------------------------------------------------------------------

fn vec_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn vec_mul_mod_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + ai * bj) % p;
        }
    }
    vec_trim(&mut out);
    out
}

/// Remainder of `a` modulo monic `m`, coefficients mod `p`.
fn vec_rem_monic(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r: Vec<u64> = a.to_vec();
    vec_trim(&mut r);
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (i, &mi) in m.iter().enumerate() {
                let idx = i + shift;
                let sub = (lead * mi) % p;
                r[idx] = (r[idx] + p * p - sub) % p;
            }
        }
        r.pop();
        vec_trim(&mut r);
    }
    r
}

/// Is the monic polynomial with coefficient vector `f` (low first, length
/// `deg+1`) irreducible over `F_p`?  Trial division by every monic polynomial
/// of degree `1..=deg/2`.
fn is_irreducible_mod_p(f: &[u64], p: u64) -> bool {
    let deg = f.len() - 1;
    if deg == 0 {
        return false;
    }
    if deg == 1 {
        return true;
    }
    for d in 1..=deg / 2 {
        // enumerate monic divisors of degree d by code
        let count = p.pow(d as u32);
        for code in 0..count {
            let mut g = Vec::with_capacity(d + 1);
            let mut c = code;
            for _ in 0..d {
                g.push(c % p);
                c /= p;
            }
            g.push(1);
            let r = vec_rem_monic(f, &g, p);
            if r.is_empty() {
                return false;
            }
        }
    }
    true
}

/// Lexicographically least monic irreducible of degree `k` over `F_p`.
/// "Lexicographic" compares coefficient tuples from the highest degree down,
/// which coincides with ordering the non-leading part as a base-`p` number.
fn lex_least_irreducible(p: u64, k: u32) -> Vec<u64> {
    let count = p.pow(k);
    for code in 0..count {
        let mut f = Vec::with_capacity(k as usize + 1);
        let mut c = code;
        for _ in 0..k {
            f.push(c % p);
            c /= p;
        }
        f.push(1);
        if is_irreducible_mod_p(&f, p) {
            return f;
        }
    }
    unreachable!("an irreducible of every degree exists over F_p")
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn factor_u64(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// ---------------------------------------------------------------------------
// Field construction and basic queries
// ---------------------------------------------------------------------------

impl Field {
    /// The rational numbers.
    pub fn rationals() -> Field {
        static RAT: OnceLock<Field> = OnceLock::new();
        RAT.get_or_init(|| Field(Arc::new(FieldRepr::Rational))).clone()
    }

    /// `F_{p^k}` with the lexicographically least monic irreducible modulus and
    /// the default size bound.
    pub fn finite(p: u64, k: u32) -> Result<Field> {
        Field::finite_with_bound(p, k, DEFAULT_FIELD_BOUND)
    }

    /// `F_{p^k}` with an explicit size bound.
    pub fn finite_with_bound(p: u64, k: u32, bound: u64) -> Result<Field> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::BadModulus("extension degree k must be >= 1".into()));
        }
        let mut size: u64 = 1;
        for _ in 0..k {
            size = size.checked_mul(p).filter(|&s| s <= bound).ok_or(Error::FieldTooLarge {
                p,
                k,
                bound,
            })?;
        }
        let modulus = lex_least_irreducible(p, k);
        Ok(Field(Arc::new(FieldRepr::Finite(FiniteField {
            p,
            k,
            modulus,
            size,
            tables: OnceLock::new(),
        }))))
    }

    /// `F_{p^k}` with a caller-supplied modulus (low degree first, length
    /// `k+1`).  The modulus must be monic irreducible; this is verified.
    pub fn finite_with_modulus(p: u64, k: u32, modulus: Vec<u64>) -> Result<Field> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        if modulus.len() != k as usize + 1 || modulus[k as usize] != 1 {
            return Err(Error::BadModulus("modulus must be monic of degree k".into()));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::BadModulus("modulus coefficients must lie in [0, p)".into()));
        }
        if !is_irreducible_mod_p(&modulus, p) {
            return Err(Error::BadModulus("modulus is reducible".into()));
        }
        let mut size: u64 = 1;
        for _ in 0..k {
            size = size
                .checked_mul(p)
                .filter(|&s| s <= DEFAULT_FIELD_BOUND)
                .ok_or(Error::FieldTooLarge { p, k, bound: DEFAULT_FIELD_BOUND })?;
        }
        Ok(Field(Arc::new(FieldRepr::Finite(FiniteField {
            p,
            k,
            modulus,
            size,
            tables: OnceLock::new(),
        }))))
    }

    pub fn is_rational(&self) -> bool {
        matches!(&*self.0, FieldRepr::Rational)
    }

    /// Characteristic: 0 for the rationals, `p` otherwise.
    pub fn characteristic(&self) -> u64 {
        match &*self.0 {
            FieldRepr::Rational => 0,
            FieldRepr::Finite(ff) => ff.p,
        }
    }

    /// Extension degree `k` (1 for prime fields); errors on the rationals.
    pub fn extension_degree(&self) -> u32 {
        match &*self.0 {
            FieldRepr::Rational => 0,
            FieldRepr::Finite(ff) => ff.k,
        }
    }

    /// Number of elements (finite fields only).
    pub fn size(&self) -> Option<u64> {
        match &*self.0 {
            FieldRepr::Rational => None,
            FieldRepr::Finite(ff) => Some(ff.size),
        }
    }

    /// Modulus coefficients, low degree first (finite fields only).
    pub fn modulus(&self) -> Option<&[u64]> {
        match &*self.0 {
            FieldRepr::Rational => None,
            FieldRepr::Finite(ff) => Some(&ff.modulus),
        }
    }

    fn fin(&self) -> &FiniteField {
        match &*self.0 {
            FieldRepr::Finite(ff) => ff,
            FieldRepr::Rational => panic!("finite-field operation on the rationals"),
        }
    }

    // -- element constructors ----------------------------------------------

    pub fn zero(&self) -> Coef {
        match &*self.0 {
            FieldRepr::Rational => Coef::Rat(BigRational::zero()),
            FieldRepr::Finite(_) => Coef::Fin(0),
        }
    }

    pub fn one(&self) -> Coef {
        match &*self.0 {
            FieldRepr::Rational => Coef::Rat(BigRational::one()),
            FieldRepr::Finite(_) => Coef::Fin(1),
        }
    }

    /// Image of an integer.
    pub fn from_i64(&self, n: i64) -> Coef {
        match &*self.0 {
            FieldRepr::Rational => Coef::rat_i64(n),
            FieldRepr::Finite(ff) => {
                let p = ff.p as i64;
                Coef::Fin(n.rem_euclid(p) as u32)
            }
        }
    }

    /// The generator `a` of the extension (errors conceptually for k = 1,
    /// where it is just the residue class of the modulus root, i.e. 0 for
    /// modulus `v`; still well defined).
    pub fn generator(&self) -> Coef {
        let ff = self.fin();
        if ff.k == 1 {
            // residue class of v modulo (v - c) is the constant root c
            let c = (ff.p - ff.modulus[0] % ff.p) % ff.p;
            Coef::Fin(c as u32)
        } else {
            Coef::Fin(ff.p as u32)
        }
    }

    pub fn is_zero(&self, c: &Coef) -> bool {
        match c {
            Coef::Fin(v) => *v == 0,
            Coef::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self, c: &Coef) -> bool {
        match c {
            Coef::Fin(v) => *v == 1,
            Coef::Rat(r) => r.is_one(),
        }
    }

    // -- digit helpers ------------------------------------------------------

    fn digits(&self, code: u32) -> Vec<u64> {
        let ff = self.fin();
        let mut v = Vec::with_capacity(ff.k as usize);
        let mut c = code as u64;
        for _ in 0..ff.k {
            v.push(c % ff.p);
            c /= ff.p;
        }
        v
    }

    fn undigits(&self, d: &[u64]) -> u32 {
        let ff = self.fin();
        let mut code: u64 = 0;
        for &c in d.iter().rev() {
            code = code * ff.p + c;
        }
        code as u32
    }

    // -- arithmetic ---------------------------------------------------------

    pub fn add(&self, a: &Coef, b: &Coef) -> Coef {
        match (&*self.0, a, b) {
            (FieldRepr::Rational, Coef::Rat(x), Coef::Rat(y)) => Coef::Rat(x + y),
            (FieldRepr::Finite(ff), Coef::Fin(x), Coef::Fin(y)) => {
                let da = self.digits(*x);
                let db = self.digits(*y);
                let sum: Vec<u64> =
                    da.iter().zip(&db).map(|(&u, &v)| (u + v) % ff.p).collect();
                Coef::Fin(self.undigits(&sum))
            }
            _ => panic!("coefficient/field mismatch in add"),
        }
    }

    pub fn neg(&self, a: &Coef) -> Coef {
        match (&*self.0, a) {
            (FieldRepr::Rational, Coef::Rat(x)) => Coef::Rat(-x),
            (FieldRepr::Finite(ff), Coef::Fin(x)) => {
                let d = self.digits(*x);
                let nd: Vec<u64> = d.iter().map(|&u| (ff.p - u) % ff.p).collect();
                Coef::Fin(self.undigits(&nd))
            }
            _ => panic!("coefficient/field mismatch in neg"),
        }
    }

    pub fn sub(&self, a: &Coef, b: &Coef) -> Coef {
        self.add(a, &self.neg(b))
    }

    fn tables(&self) -> &MulTables {
        let ff = self.fin();
        ff.tables.get_or_init(|| {
            // find a primitive element by exhaustive order check
            let n = ff.size;
            let group = n - 1;
            let primes = factor_u64(group);
            let mut gen_code = 0u32;
            'outer: for cand in 2..n {
                let c = Coef::Fin(cand as u32);
                for &q in &primes {
                    if self.is_one(&self.pow_nocache(&c, group / q)) {
                        continue 'outer;
                    }
                }
                gen_code = cand as u32;
                break;
            }
            // p = 2, k = 1 has trivial group; use 1 as generator
            if group == 1 {
                gen_code = 1;
            }
            let g = Coef::Fin(gen_code);
            let mut exp = vec![0u32; group as usize];
            let mut log = vec![0u32; n as usize];
            let mut acc = self.one();
            for (i, slot) in exp.iter_mut().enumerate() {
                let code = match acc {
                    Coef::Fin(c) => c,
                    _ => unreachable!(),
                };
                *slot = code;
                log[code as usize] = i as u32;
                acc = self.mul_poly(&acc, &g);
            }
            MulTables { exp, log }
        })
    }

    /// Residue-polynomial multiplication (no tables).
    fn mul_poly(&self, a: &Coef, b: &Coef) -> Coef {
        let ff = self.fin();
        let (x, y) = match (a, b) {
            (Coef::Fin(x), Coef::Fin(y)) => (*x, *y),
            _ => panic!("coefficient/field mismatch in mul"),
        };
        if x == 0 || y == 0 {
            return Coef::Fin(0);
        }
        let da = self.digits(x);
        let db = self.digits(y);
        let prod = vec_mul_mod_p(&da, &db, ff.p);
        let mut red = vec_rem_monic(&prod, &ff.modulus, ff.p);
        red.resize(ff.k as usize, 0);
        Coef::Fin(self.undigits(&red))
    }

    fn pow_nocache(&self, a: &Coef, mut e: u64) -> Coef {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_poly(&acc, &base);
            }
            base = self.mul_poly(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn mul(&self, a: &Coef, b: &Coef) -> Coef {
        match (&*self.0, a, b) {
            (FieldRepr::Rational, Coef::Rat(x), Coef::Rat(y)) => Coef::Rat(x * y),
            (FieldRepr::Finite(_), Coef::Fin(x), Coef::Fin(y)) => {
                if *x == 0 || *y == 0 {
                    return Coef::Fin(0);
                }
                let ff = self.fin();
                let t = self.tables();
                let group = ff.size - 1;
                let i = t.log[*x as usize] as u64 + t.log[*y as usize] as u64;
                Coef::Fin(t.exp[(i % group) as usize])
            }
            _ => panic!("coefficient/field mismatch in mul"),
        }
    }

    pub fn inv(&self, a: &Coef) -> Result<Coef> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        match (&*self.0, a) {
            (FieldRepr::Rational, Coef::Rat(x)) => Ok(Coef::Rat(x.recip())),
            (FieldRepr::Finite(_), Coef::Fin(x)) => {
                let ff = self.fin();
                let t = self.tables();
                let group = ff.size - 1;
                let l = t.log[*x as usize] as u64;
                Ok(Coef::Fin(t.exp[((group - l) % group) as usize]))
            }
            _ => panic!("coefficient/field mismatch in inv"),
        }
    }

    pub fn div(&self, a: &Coef, b: &Coef) -> Result<Coef> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &Coef, e: u64) -> Coef {
        match &*self.0 {
            FieldRepr::Rational => {
                let mut acc = self.one();
                let mut base = a.clone();
                let mut e = e;
                while e > 0 {
                    if e & 1 == 1 {
                        acc = self.mul(&acc, &base);
                    }
                    base = self.mul(&base, &base);
                    e >>= 1;
                }
                acc
            }
            FieldRepr::Finite(ff) => {
                if self.is_zero(a) {
                    return if e == 0 { self.one() } else { self.zero() };
                }
                let t = self.tables();
                let group = ff.size - 1;
                let l = t.log[match a {
                    Coef::Fin(x) => *x as usize,
                    _ => panic!("coefficient/field mismatch in pow"),
                }] as u64;
                let i = (l % group) as u128 * (e % group) as u128 % group as u128;
                Coef::Fin(t.exp[i as usize])
            }
        }
    }

    /// Frobenius `x -> x^p` (identity on the rationals).
    pub fn frobenius(&self, a: &Coef) -> Coef {
        match &*self.0 {
            FieldRepr::Rational => a.clone(),
            FieldRepr::Finite(ff) => self.pow(a, ff.p),
        }
    }

    /// p-th root (inverse Frobenius); exists and is unique in `F_{p^k}`.
    pub fn pth_root(&self, a: &Coef) -> Coef {
        match &*self.0 {
            FieldRepr::Rational => panic!("pth_root on the rationals"),
            FieldRepr::Finite(ff) => {
                // x -> x^(p^(k-1)) inverts Frobenius
                let mut acc = a.clone();
                for _ in 0..ff.k - 1 {
                    acc = self.frobenius(&acc);
                }
                acc
            }
        }
    }

    /// Smallest `d | k` with `a` fixed by the `d`-th Frobenius power, i.e. the
    /// degree of the minimal subfield `F_{p^d}` containing `a`.
    pub fn minimal_subfield_degree(&self, a: &Coef) -> u32 {
        let ff = self.fin();
        for d in 1..=ff.k {
            if !ff.k.is_multiple_of(d) {
                continue;
            }
            let mut x = a.clone();
            for _ in 0..d {
                x = self.frobenius(&x);
            }
            if &x == a {
                return d;
            }
        }
        ff.k
    }

    /// All elements, starting with 0 then 1, then the remaining codes in
    /// increasing order.
    pub fn enumerate(&self) -> impl Iterator<Item = Coef> {
        let n = self.size().expect("enumerate on an infinite field");
        (0..n).map(|c| Coef::Fin(c as u32))
    }

    // -- printing and parsing ----------------------------------------------

    /// Canonical text for an element: decimal for prime fields and rationals
    /// (`-5/3` style), a polynomial in `a` for proper extensions.
    pub fn coef_text(&self, c: &Coef) -> String {
        match (&*self.0, c) {
            (FieldRepr::Rational, Coef::Rat(r)) => {
                if r.is_integer() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            (FieldRepr::Finite(ff), Coef::Fin(x)) => {
                if ff.k == 1 || (*x as u64) < ff.p {
                    return x.to_string();
                }
                let d = self.digits(*x);
                let mut parts: Vec<String> = Vec::new();
                for (i, &ci) in d.iter().enumerate().rev() {
                    if ci == 0 {
                        continue;
                    }
                    let var = match i {
                        0 => String::new(),
                        1 => "a".to_string(),
                        _ => format!("a^{i}"),
                    };
                    let part = if i == 0 {
                        ci.to_string()
                    } else if ci == 1 {
                        var
                    } else {
                        format!("{ci}*{var}")
                    };
                    parts.push(part);
                }
                parts.join("+")
            }
            _ => panic!("coefficient/field mismatch in coef_text"),
        }
    }

    /// Parse a rational like `-5/3`, or for finite fields an integer or an
    /// `a`-polynomial like `a^3+a+1`.
    pub fn parse_coef(&self, s: &str) -> Result<Coef> {
        let s = s.trim();
        match &*self.0 {
            FieldRepr::Rational => {
                let (num_s, den_s) = match s.split_once('/') {
                    Some((n, d)) => (n.trim(), d.trim()),
                    None => (s, "1"),
                };
                let num: BigInt =
                    num_s.parse().map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
                let den: BigInt =
                    den_s.parse().map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
                if den.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(Coef::Rat(BigRational::new(num, den)))
            }
            FieldRepr::Finite(ff) => {
                let mut acc = self.zero();
                for term in s.split('+') {
                    let term = term.trim();
                    if term.is_empty() {
                        return Err(Error::Parse(format!("bad element `{s}`")));
                    }
                    let (coef_s, pow) = if let Some(rest) = term.strip_prefix("a^") {
                        ("1", rest.parse::<u32>().map_err(|_| {
                            Error::Parse(format!("bad exponent in `{term}`"))
                        })?)
                    } else if term == "a" {
                        ("1", 1)
                    } else if let Some((c, apart)) = term.split_once('*') {
                        let e = if apart.trim() == "a" {
                            1
                        } else if let Some(rest) = apart.trim().strip_prefix("a^") {
                            rest.parse::<u32>()
                                .map_err(|_| Error::Parse(format!("bad exponent in `{term}`")))?
                        } else {
                            return Err(Error::Parse(format!("bad term `{term}`")));
                        };
                        (c.trim(), e)
                    } else {
                        (term, 0)
                    };
                    let cv: i64 = coef_s
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad coefficient `{coef_s}`")))?;
                    let mut t = self.from_i64(cv);
                    if pow > 0 {
                        if ff.k == 1 {
                            return Err(Error::Parse(
                                "generator `a` used in a prime field".into(),
                            ));
                        }
                        t = self.mul(&t, &self.pow(&self.generator(), pow as u64));
                    }
                    acc = self.add(&acc, &t);
                }
                Ok(acc)
            }
        }
    }
}

// ---------------------------------------------------------------------------
// FieldElement: the public pairing of a field handle and an element
// ---------------------------------------------------------------------------

/// An element bound to its field — the hand-off type at API boundaries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldElement {
    pub field: Field,
    pub value: Coef,
}

impl FieldElement {
    pub fn new(field: Field, value: Coef) -> FieldElement {
        FieldElement { field, value }
    }

    pub fn is_zero(&self) -> bool {
        self.field.is_zero(&self.value)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.coef_text(&self.value))
    }
}

/// Serializable description of a field: `{"kind","p","k","modulus"}` for
/// finite fields, `{"kind":"rational"}` for the rationals.
#[derive(Clone, Debug, serde::Serialize, serde::Deserialize, PartialEq, Eq)]
pub struct FieldDesc {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    /// Modulus coefficients `[c0, ..., ck]`, low degree first.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u64>>,
}

impl Field {
    pub fn describe(&self) -> FieldDesc {
        match &*self.0 {
            FieldRepr::Rational => FieldDesc { kind: "rational".into(), p: None, k: None, modulus: None },
            FieldRepr::Finite(ff) => FieldDesc {
                kind: "finite".into(),
                p: Some(ff.p),
                k: Some(ff.k),
                modulus: Some(ff.modulus.clone()),
            },
        }
    }

    pub fn from_desc(d: &FieldDesc) -> Result<Field> {
        match d.kind.as_str() {
            "rational" => Ok(Field::rationals()),
            "finite" => {
                let p = d.p.ok_or_else(|| Error::Manifest("finite field needs p".into()))?;
                let k = d.k.ok_or_else(|| Error::Manifest("finite field needs k".into()))?;
                match &d.modulus {
                    Some(m) => Field::finite_with_modulus(p, k, m.clone()),
                    None => Field::finite(p, k),
                }
            }
            other => Err(Error::Manifest(format!("unknown field kind `{other}`"))),
        }
    }
}
