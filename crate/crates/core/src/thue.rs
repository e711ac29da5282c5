//! The Thue inequality `0 < |F(x, y)| <= h`.
//!
//! [`solve`] splits the search in two. Every solution with `|y| <= Y0` is found
//! by a finite scan, and every solution with `Y0 < y <= q_max` has `x / y` among
//! the continued-fraction convergents of a real root of `F(z, 1)`. `Y0` is derived
//! from rigorous bounds on `|f|` and `|f'|`, so the union is complete up to `q_max`.
//! Forms with a rational linear factor, and forms without real roots, are solved
//! completely with no denominator cap.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cf::convergents;
use crate::error::{Error, Result};
use crate::form::QuarticForm;
use crate::poly::IntPoly;
use crate::roots::{isolate, real_roots as isolate_real_roots, refine, simplest_rational_in, RootEnclosure};
use crate::solution::{canonical_sign, PrimitiveSolution};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    pub h: BigInt,
    /// Lower bound for the exhaustive phase; the solver raises it to `Y0` when needed.
    pub y_exhaustive: u64,
    pub q_max: BigInt,
    pub root_precision_bits: u32,
}

impl SolverConfig {
    pub fn new(h: impl Into<BigInt>) -> Self {
        Self {
            h: h.into(),
            y_exhaustive: 64,
            q_max: BigInt::from(10u64.pow(12)),
            root_precision_bits: 256,
        }
    }

    pub fn with_q_max(mut self, q_max: impl Into<BigInt>) -> Self {
        self.q_max = q_max.into();
        self
    }
}

/// How completeness was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMethod {
    /// `F` has a rational linear factor; complete.
    LinearFactor,
    /// `F(z, 1)` has no real roots; complete.
    NoRealRoots,
    /// `F = c Q^2` with `|c| > h`; no solutions.
    ScaledSquare,
    /// Exhaustive scan below `Y0`, convergents up to `q_max`.
    Convergents,
    /// Direct evaluation over a box of radius `y_exhaustive`.
    BruteForce,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchCertificate {
    pub method: SearchMethod,
    /// The bound `Y0` of the exhaustive phase actually used.
    pub y_exhaustive: BigInt,
    /// Present only when completeness depends on it.
    pub q_max: Option<BigInt>,
    pub roots: Vec<RootEnclosure>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSet {
    pub plus: Vec<PrimitiveSolution>,
    pub minus: Vec<PrimitiveSolution>,
    pub certificate: SearchCertificate,
}

impl SolutionSet {
    fn from_pairs(form: &QuarticForm, pairs: BTreeSet<(BigInt, BigInt)>, certificate: SearchCertificate) -> Self {
        let mut plus = Vec::new();
        let mut minus = Vec::new();
        for (x, y) in pairs {
            let value = form.eval(&x, &y);
            let s = PrimitiveSolution { x, y, value };
            if s.value.is_positive() {
                plus.push(s);
            } else {
                minus.push(s);
            }
        }
        plus.sort_by_key(PrimitiveSolution::sort_key);
        minus.sort_by_key(PrimitiveSolution::sort_key);
        Self { plus, minus, certificate }
    }

    pub fn len(&self) -> usize {
        self.plus.len() + self.minus.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = &PrimitiveSolution> {
        self.plus.iter().chain(self.minus.iter())
    }

    /// Solutions with `max(|x|, |y|) <= bound`.
    pub fn restricted(&self, bound: &BigInt) -> SolutionSet {
        let keep = |s: &&PrimitiveSolution| s.x.abs() <= *bound && s.y.abs() <= *bound;
        SolutionSet {
            plus: self.plus.iter().filter(keep).cloned().collect(),
            minus: self.minus.iter().filter(keep).cloned().collect(),
            certificate: self.certificate.clone(),
        }
    }

    /// Solutions with `0 < |F| <= h` for a smaller `h`.
    pub fn with_h(&self, h: &BigInt) -> SolutionSet {
        let keep = |s: &&PrimitiveSolution| s.value.abs() <= *h;
        SolutionSet {
            plus: self.plus.iter().filter(keep).cloned().collect(),
            minus: self.minus.iter().filter(keep).cloned().collect(),
            certificate: self.certificate.clone(),
        }
    }

    /// `(x, y)` pairs of `plus` followed by those of `minus`.
    pub fn pairs(&self) -> Vec<(BigInt, BigInt)> {
        self.iter().map(|s| (s.x.clone(), s.y.clone())).collect()
    }
}

struct Collector<'a> {
    form: &'a QuarticForm,
    h: &'a BigInt,
    found: BTreeSet<(BigInt, BigInt)>,
}

impl<'a> Collector<'a> {
    fn new(form: &'a QuarticForm, h: &'a BigInt) -> Self {
        Self { form, h, found: BTreeSet::new() }
    }

    fn offer(&mut self, x: &BigInt, y: &BigInt) {
        if !x.gcd(y).is_one() {
            return;
        }
        let v = self.form.eval(x, y);
        if v.is_zero() || &v.abs() > self.h {
            return;
        }
        self.found.insert(canonical_sign(x.clone(), y.clone()));
    }

    fn finish(self, certificate: SearchCertificate) -> SolutionSet {
        SolutionSet::from_pairs(self.form, self.found, certificate)
    }
}

fn rat(n: &BigInt) -> BigRational {
    BigRational::from_integer(n.clone())
}

/// All integers `s` with `|p(s)| <= h`, for a nonconstant `p`.
pub(crate) fn sublevel_integers(p: &IntPoly, h: &BigInt) -> Vec<BigInt> {
    debug_assert!(p.degree().unwrap_or(0) >= 1);
    let quarter = BigRational::new(BigInt::one(), BigInt::from(4));
    let mut encl = Vec::new();
    for shifted in [p.add_constant(&-h), p.add_constant(h)] {
        let s = shifted.squarefree_part();
        for r in isolate(&shifted) {
            encl.push(refine(&s, &r, &quarter));
        }
    }
    encl.sort_by(|a, b| a.lo.cmp(&b.lo));
    // merge into disjoint clusters
    let mut clusters: Vec<(BigRational, BigRational)> = Vec::new();
    for e in encl {
        match clusters.last_mut() {
            Some(last) if e.lo <= last.1 => {
                if e.hi > last.1 {
                    last.1 = e.hi;
                }
            }
            _ => clusters.push((e.lo, e.hi)),
        }
    }
    let mut out = Vec::new();
    let push_range = |lo: BigInt, hi: BigInt, out: &mut Vec<BigInt>| {
        let mut s = lo;
        while s <= hi {
            out.push(s.clone());
            s += 1;
        }
    };
    for (i, (lo, hi)) in clusters.iter().enumerate() {
        push_range(lo.ceil().to_integer(), hi.floor().to_integer(), &mut out);
        if let Some((next_lo, _)) = clusters.get(i + 1) {
            let mid = (hi + next_lo) / BigInt::from(2);
            if &p.eval_rational(&mid).abs() <= &rat(h) {
                push_range(hi.floor().to_integer() + 1, next_lo.ceil().to_integer() - 1, &mut out);
            }
        }
    }
    out.sort();
    out.dedup();
    out.retain(|s| &p.eval(s).abs() <= h);
    out
}

/// Isolating enclosures for the real roots of `F(z, 1)`, each of width `<= 2^(-bits/2)`.
pub fn real_roots(form: &QuarticForm, precision_bits: u32) -> Vec<RootEnclosure> {
    isolate_real_roots(&form.dehomogenize(), precision_bits)
}

/// A rational root `p / q` of `F(z, 1)` (or `(1, 0)` for the root at infinity).
fn rational_root(form: &QuarticForm) -> Option<(BigInt, BigInt)> {
    if form.coeff(0).is_zero() {
        return Some((BigInt::one(), BigInt::zero()));
    }
    let f = form.dehomogenize();
    let lead = f.leading();
    let width = BigRational::new(BigInt::one(), &lead * &lead * BigInt::from(2));
    let s = f.squarefree_part();
    for r in isolate(&f) {
        let r = refine(&s, &r, &width);
        let cand = simplest_rational_in(&r.lo, &r.hi);
        if f.sign_at(&cand).is_eq() {
            return Some((cand.numer().clone(), cand.denom().clone()));
        }
    }
    None
}

/// `F(x0 + p s, y0 + q s)` as a polynomial in `s`.
fn along_line(form: &QuarticForm, x0: &BigInt, y0: &BigInt, p: &BigInt, q: &BigInt) -> IntPoly {
    let lx = IntPoly::new(alloc::vec![x0.clone(), p.clone()]);
    let ly = IntPoly::new(alloc::vec![y0.clone(), q.clone()]);
    let one = IntPoly::new(alloc::vec![BigInt::one()]);
    let mut px = alloc::vec![one.clone()];
    let mut py = alloc::vec![one];
    for k in 0..4 {
        px.push(px[k].mul(&lx));
        py.push(py[k].mul(&ly));
    }
    let mut acc = IntPoly::new(Vec::new());
    for (i, a) in form.coeffs().iter().enumerate() {
        if !a.is_zero() {
            acc = acc.add(&px[4 - i].mul(&py[i]).scale(a));
        }
    }
    acc
}

/// `F = L^m G` with `L = q x - p y`: every solution has `L(x, y) = t`, `|t|^m <= h`.
fn solve_linear_factor(form: &QuarticForm, h: &BigInt, p: &BigInt, q: &BigInt) -> Result<SolutionSet> {
    let e = q.extended_gcd(&-p);
    let (u, v) = if e.gcd.is_negative() { (-e.x, -e.y) } else { (e.x, e.y) };
    let base = along_line(form, &u, &v, p, q);
    let m = 4 - base.degree().expect("F restricted to a line through a root of a nonzero form") as u32;
    let mut col = Collector::new(form, h);
    let certificate = SearchCertificate {
        method: SearchMethod::LinearFactor,
        y_exhaustive: BigInt::zero(),
        q_max: None,
        roots: if q.is_zero() { Vec::new() } else { alloc::vec![RootEnclosure::exact(BigRational::new(p.clone(), q.clone()))] },
    };
    if m == 4 {
        // F = c L^4
        if &base.leading().abs() <= h {
            return Err(Error::DegenerateForm("fourth power of a linear form with infinitely many solutions"));
        }
        return Ok(col.finish(certificate));
    }
    let t_max = h.nth_root(m);
    let mut t = BigInt::one();
    while t <= t_max {
        for t in [t.clone(), -t.clone()] {
            let (x0, y0) = (&u * &t, &v * &t);
            let poly = along_line(form, &x0, &y0, p, q);
            for s in sublevel_integers(&poly, h) {
                col.offer(&(&x0 + p * &s), &(&y0 + q * &s));
            }
        }
        t += 1;
    }
    Ok(col.finish(certificate))
}

/// Largest `Y >= 0` with `Y^4 * m <= h`.
fn definite_height(m: &BigRational, h: &BigInt) -> BigInt {
    let approx = libm::pow(h.to_f64().unwrap_or(f64::MAX) / m.to_f64().unwrap_or(f64::MIN_POSITIVE), 0.25);
    let mut y = BigInt::from(approx.max(0.0).min(1e15) as u64);
    let hr = rat(h);
    let fits = |y: &BigInt| &(rat(&y.pow(4)) * m) <= &hr;
    while !fits(&y) && y.is_positive() {
        y -= 1;
    }
    while fits(&(&y + 1)) {
        y += 1;
    }
    y
}

/// Positive lower bound of `|f|` over the real critical points of `f`.
fn critical_minimum(f: &IntPoly) -> Option<BigRational> {
    let df = f.derivative();
    let sdf = df.squarefree_part();
    let mut best: Option<BigRational> = None;
    for c in isolate(&df) {
        let mut width = BigRational::new(BigInt::one(), BigInt::from(1u64 << 20));
        let bound = loop {
            let r = refine(&sdf, &c, &width);
            if let Some(b) = f.abs_lower_bound(&r.lo, &r.hi) {
                break b;
            }
            width = width / BigInt::from(1u64 << 20);
        };
        best = Some(match best {
            Some(b) if b <= bound => b,
            _ => bound,
        });
    }
    best
}

/// Scans `1 <= y <= y_max` with the generic per-row routine.
fn scan_rows(col: &mut Collector<'_>, y_max: &BigInt) {
    let mut y = BigInt::one();
    while &y <= y_max {
        let row = col.form.at_y(&y);
        for x in sublevel_integers(&row, col.h) {
            col.offer(&x, &y);
        }
        y += 1;
    }
}

fn solve_no_real_roots(form: &QuarticForm, h: &BigInt) -> SolutionSet {
    let f = form.dehomogenize();
    let m = critical_minimum(&f).expect("a quartic has a real critical point");
    let y_max = definite_height(&m, h);
    let mut col = Collector::new(form, h);
    col.offer(&BigInt::one(), &BigInt::zero());
    scan_rows(&mut col, &y_max);
    col.finish(SearchCertificate { method: SearchMethod::NoRealRoots, y_exhaustive: y_max, q_max: None, roots: Vec::new() })
}

fn gap(a: &RootEnclosure, b: &RootEnclosure) -> BigRational {
    if a.hi < b.lo {
        &b.lo - &a.hi
    } else if b.hi < a.lo {
        &a.lo - &b.hi
    } else {
        BigRational::zero()
    }
}

struct RootNeighbourhood {
    root: RootEnclosure,
    /// Lower bound for `|f'|` on `[root.lo - rho, root.hi + rho]`.
    d: BigRational,
}

/// Neighbourhoods of the roots where `|f'| >= d`, and a lower bound for `|f|` outside them.
fn neighbourhoods(f: &IntPoly, roots: &[RootEnclosure]) -> (Vec<RootNeighbourhood>, BigRational) {
    let df = f.derivative();
    let sdf = df.squarefree_part();
    let crit_coarse = isolate(&df);
    let mut bits = 32u64;
    loop {
        let width = BigRational::new(BigInt::one(), BigInt::one() << bits);
        let crit: Vec<RootEnclosure> = crit_coarse.iter().map(|c| refine(&sdf, c, &width)).collect();
        let mut ok = true;
        let mut out = Vec::new();
        let mut m: Option<BigRational> = None;
        let update_m = |v: BigRational, m: &mut Option<BigRational>| {
            if m.as_ref().is_none_or(|cur| &v < cur) {
                *m = Some(v);
            }
        };
        for (i, r) in roots.iter().enumerate() {
            let mut rho = BigRational::one();
            for (j, other) in roots.iter().enumerate() {
                if i != j {
                    let g = gap(r, other) / BigInt::from(2);
                    if g < rho {
                        rho = g;
                    }
                }
            }
            for c in &crit {
                let g = gap(r, c) / BigInt::from(2);
                if g < rho {
                    rho = g;
                }
            }
            if !rho.is_positive() {
                ok = false;
                break;
            }
            let d = loop {
                let lo = &r.lo - &rho;
                let hi = &r.hi + &rho;
                if let Some(d) = df.abs_lower_bound(&lo, &hi) {
                    break Some((d, lo, hi));
                }
                rho = rho / BigInt::from(2);
                if rho < width {
                    break None;
                }
            };
            let Some((d, lo, hi)) = d else {
                ok = false;
                break;
            };
            update_m(f.eval_rational(&lo).abs(), &mut m);
            update_m(f.eval_rational(&hi).abs(), &mut m);
            out.push(RootNeighbourhood { root: r.clone(), d });
        }
        if ok {
            for c in &crit {
                match f.abs_lower_bound(&c.lo, &c.hi) {
                    Some(v) => update_m(v, &mut m),
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
        }
        if ok {
            return (out, m.expect("at least one real root"));
        }
        bits *= 2;
    }
}

/// Smallest `Y >= 1` with `Y^4 m > h` and `Y^2 d > 2 h`.
fn transition_height(m: &BigRational, d: &BigRational, h: &BigInt) -> BigInt {
    let hf = h.to_f64().unwrap_or(f64::MAX);
    let est = libm::pow(hf / m.to_f64().unwrap_or(f64::MIN_POSITIVE), 0.25)
        .max(libm::sqrt(2.0 * hf / d.to_f64().unwrap_or(f64::MIN_POSITIVE)));
    let hr = rat(h);
    let ok = |y: &BigInt| rat(&y.pow(4)) * m > hr && rat(&(y * y)) * d > &hr * BigInt::from(2);
    let mut y = BigInt::from(est.clamp(1.0, 1e15) as u64).max(BigInt::one());
    while y > BigInt::one() && ok(&(&y - 1)) {
        y -= 1;
    }
    while !ok(&y) {
        y += 1;
    }
    y
}

fn solve_convergents(form: &QuarticForm, cfg: &SolverConfig, f: &IntPoly) -> Result<SolutionSet> {
    let h = &cfg.h;
    let roots = isolate_real_roots(f, cfg.root_precision_bits);
    let (nbhd, m) = neighbourhoods(f, &roots);
    let d_min = nbhd.iter().map(|n| n.d.clone()).min().expect("real roots present");
    let y0 = transition_height(&m, &d_min, h).max(BigInt::from(cfg.y_exhaustive));
    let hr = rat(h);
    let mut col = Collector::new(form, h);
    col.offer(&BigInt::one(), &BigInt::zero());
    let mut y = BigInt::one();
    while y <= y0 {
        let y4 = y.pow(4);
        if rat(&y4) * &m > hr {
            // x / y lies within h / (d y^4) of some root
            let yr = rat(&y);
            for n in &nbhd {
                let slack = &hr / (&n.d * rat(&(&y4 / &y)));
                let lo = (&n.root.lo * &yr - &slack).ceil().to_integer();
                let hi = (&n.root.hi * &yr + &slack).floor().to_integer();
                let mut x = lo;
                while x <= hi {
                    col.offer(&x, &y);
                    x += 1;
                }
            }
        } else {
            let row = form.at_y(&y);
            for x in sublevel_integers(&row, h) {
                col.offer(&x, &y);
            }
        }
        y += 1;
    }
    for r in &roots {
        for (p, q) in convergents(r, &cfg.q_max)? {
            if q > y0 {
                col.offer(&p, &q);
            }
        }
    }
    Ok(col.finish(SearchCertificate {
        method: SearchMethod::Convergents,
        y_exhaustive: y0,
        q_max: Some(cfg.q_max.clone()),
        roots,
    }))
}

/// Primitive solutions of `0 < |F(x, y)| <= h`.
pub fn solve(form: &QuarticForm, cfg: &SolverConfig) -> Result<SolutionSet> {
    if form.is_zero() {
        return Err(Error::DegenerateForm("form is identically zero"));
    }
    if !cfg.h.is_positive() {
        return Err(Error::Domain("h must be positive"));
    }
    let h = &cfg.h;
    if let Some((p, q)) = rational_root(form) {
        return solve_linear_factor(form, h, &p, &q);
    }
    let f = form.dehomogenize();
    if !f.is_squarefree() {
        // no rational roots, so f = c Q^2 with Q an irreducible quadratic
        let qd = f.squarefree_part();
        let c = form.coeff(0) / (qd.leading() * qd.leading());
        let [q2, q1, q0] = [&qd.coeffs()[0], &qd.coeffs()[1], &qd.coeffs()[2]];
        let disc = q1 * q1 - BigInt::from(4) * q0 * q2;
        if disc.is_positive() {
            if &c.abs() <= h {
                return Err(Error::DegenerateForm("multiple of the square of an indefinite quadratic form"));
            }
            let col = Collector::new(form, h);
            return Ok(col.finish(SearchCertificate {
                method: SearchMethod::ScaledSquare,
                y_exhaustive: BigInt::zero(),
                q_max: None,
                roots: Vec::new(),
            }));
        }
        return Ok(solve_no_real_roots(form, h));
    }
    if isolate(&f).is_empty() {
        return Ok(solve_no_real_roots(form, h));
    }
    solve_convergents(form, cfg, &f)
}

/// Every primitive solution with `max(|x|, |y|) <= bound`, by direct evaluation.
pub fn brute_solve(form: &QuarticForm, h: &BigInt, bound: u64) -> SolutionSet {
    let mut found = BTreeSet::new();
    let a4 = form.coeff(4);
    if !a4.is_zero() && &a4.abs() <= h {
        found.insert((BigInt::zero(), BigInt::one()));
    }
    let sum: BigInt = form.coeffs().iter().map(|c| c.abs()).sum();
    let b4 = BigInt::from(bound).pow(4);
    let fast = &sum * &b4 < (BigInt::one() << 62) && h.bits() < 62;
    if fast {
        brute_fast(form, h.to_i64().expect("h below 2^62"), bound as i64, &mut found);
    } else {
        brute_exact(form, h, bound, &mut found);
    }
    SolutionSet::from_pairs(
        form,
        found,
        SearchCertificate {
            method: SearchMethod::BruteForce,
            y_exhaustive: BigInt::from(bound),
            q_max: None,
            roots: Vec::new(),
        },
    )
}

fn brute_exact(form: &QuarticForm, h: &BigInt, bound: u64, found: &mut BTreeSet<(BigInt, BigInt)>) {
    let b = BigInt::from(bound);
    let mut x = BigInt::one();
    while x <= b {
        let mut y = -b.clone();
        while y <= b {
            let v = form.eval(&x, &y);
            if !v.is_zero() && &v.abs() <= h && x.gcd(&y).is_one() {
                found.insert((x.clone(), y.clone()));
            }
            y += 1;
        }
        x += 1;
    }
}

/// Row scan with fourth-order forward differences in wrapping `i64`.
///
/// Every value has absolute value below `2^62`, so the wrapped result is exact.
fn brute_fast(form: &QuarticForm, h: i64, bound: i64, found: &mut BTreeSet<(BigInt, BigInt)>) {
    let a: [i128; 5] = core::array::from_fn(|i| form.coeff(i).to_i128().expect("small coefficients"));
    for y in -bound..=bound {
        let yy = y as i128;
        let c: [i128; 5] = core::array::from_fn(|k| a[4 - k] * yy.pow((4 - k) as u32));
        let p = |x: i128| (((c[4] * x + c[3]) * x + c[2]) * x + c[1]) * x + c[0];
        let v: [i128; 5] = core::array::from_fn(|i| p(1 + i as i128));
        let mut d = [
            v[0],
            v[1] - v[0],
            v[2] - 2 * v[1] + v[0],
            v[3] - 3 * v[2] + 3 * v[1] - v[0],
            v[4] - 4 * v[3] + 6 * v[2] - 4 * v[1] + v[0],
        ]
        .map(|t| t as i64);
        for x in 1..=bound {
            let val = d[0];
            if val != 0 && val.unsigned_abs() <= h as u64 && x.gcd(&y) == 1 {
                found.insert((BigInt::from(x), BigInt::from(y)));
            }
            d[0] = d[0].wrapping_add(d[1]);
            d[1] = d[1].wrapping_add(d[2]);
            d[2] = d[2].wrapping_add(d[3]);
            d[3] = d[3].wrapping_add(d[4]);
        }
    }
}
