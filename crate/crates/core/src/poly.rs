//! Sparse multivariate polynomials over the Gaussian rationals, with exact
//! division and gcd so that fractions of polynomials stay in reduced form.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// An element of Q(i): `re + im*i` with rational parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GaussRat {
    pub re: BigRational,
    pub im: BigRational,
}

pub fn brat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl GaussRat {
    pub fn zero() -> Self {
        GaussRat::default()
    }
    pub fn one() -> Self {
        GaussRat {
            re: BigRational::one(),
            im: BigRational::zero(),
        }
    }
    pub fn i() -> Self {
        GaussRat {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }
    pub fn from_rat(re: BigRational) -> Self {
        GaussRat {
            re,
            im: BigRational::zero(),
        }
    }
    pub fn from_int(n: i64) -> Self {
        Self::from_rat(BigRational::from(BigInt::from(n)))
    }
    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        GaussRat {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }
    pub fn sub(&self, o: &Self) -> Self {
        GaussRat {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }
    pub fn neg(&self) -> Self {
        GaussRat {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
    pub fn mul(&self, o: &Self) -> Self {
        GaussRat {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
    pub fn inv(&self) -> Self {
        let n = &self.re * &self.re + &self.im * &self.im;
        assert!(!n.is_zero(), "division by zero in Q(i)");
        GaussRat {
            re: &self.re / &n,
            im: -(&self.im / &n),
        }
    }
    pub fn div(&self, o: &Self) -> Self {
        self.mul(&o.inv())
    }
    pub fn conj(&self) -> Self {
        GaussRat {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }
    pub fn pow(&self, n: u32) -> Self {
        let mut acc = GaussRat::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(rat_to_f64(&self.re), rat_to_f64(&self.im))
    }
}

pub fn rat_to_f64(r: &BigRational) -> f64 {
    let num = r.numer();
    let den = r.denom();
    // Stay exact for values that fit in i64, fall back to string parsing.
    match (i64::try_from(num), i64::try_from(den)) {
        (Ok(n), Ok(d)) => n as f64 / d as f64,
        _ => {
            let n: f64 = num.to_string().parse().unwrap_or(f64::NAN);
            let d: f64 = den.to_string().parse().unwrap_or(f64::NAN);
            n / d
        }
    }
}

/// A monomial in named variables with non-negative exponents.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Mono(pub BTreeMap<String, u32>);

impl Mono {
    pub fn one() -> Self {
        Mono(BTreeMap::new())
    }
    pub fn var(name: &str) -> Self {
        let mut m = BTreeMap::new();
        m.insert(name.to_string(), 1);
        Mono(m)
    }
    pub fn degree(&self) -> u32 {
        self.0.values().sum()
    }
    pub fn mul(&self, o: &Self) -> Self {
        let mut m = self.0.clone();
        for (v, e) in &o.0 {
            *m.entry(v.clone()).or_insert(0) += e;
        }
        Mono(m)
    }
    /// Exact division; `None` when some exponent would go negative.
    pub fn div(&self, o: &Self) -> Option<Self> {
        let mut m = self.0.clone();
        for (v, e) in &o.0 {
            let cur = m.entry(v.clone()).or_insert(0);
            if *cur < *e {
                return None;
            }
            *cur -= e;
            if *cur == 0 {
                m.remove(v);
            }
        }
        Some(Mono(m))
    }
    /// Graded-lex comparison used for leading terms.
    fn grlex(&self, o: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&o.degree())
            .then_with(|| self.0.cmp(&o.0))
    }
}

/// Sparse polynomial over Q(i); zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Poly {
    pub terms: BTreeMap<Mono, GaussRat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }
    pub fn one() -> Self {
        Poly::constant(GaussRat::one())
    }
    pub fn constant(c: GaussRat) -> Self {
        let mut p = Poly::zero();
        if !c.is_zero() {
            p.terms.insert(Mono::one(), c);
        }
        p
    }
    pub fn var(name: &str) -> Self {
        let mut p = Poly::zero();
        p.terms.insert(Mono::var(name), GaussRat::one());
        p
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|m| m.0.is_empty())
    }
    pub fn as_constant(&self) -> Option<GaussRat> {
        if self.is_zero() {
            return Some(GaussRat::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    fn insert(&mut self, m: Mono, c: GaussRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.insert(m.clone(), c.clone());
        }
        r
    }
    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.insert(m.clone(), c.neg());
        }
        r
    }
    pub fn neg(&self) -> Self {
        let mut r = Poly::zero();
        for (m, c) in &self.terms {
            r.terms.insert(m.clone(), c.neg());
        }
        r
    }
    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                r.insert(m1.mul(m2), c1.mul(c2));
            }
        }
        r
    }
    pub fn scale(&self, c: &GaussRat) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut r = Poly::zero();
        for (m, k) in &self.terms {
            r.terms.insert(m.clone(), k.mul(c));
        }
        r
    }
    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Poly::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn leading(&self) -> Option<(&Mono, &GaussRat)> {
        self.terms.iter().max_by(|a, b| a.0.grlex(b.0))
    }

    pub fn variables(&self) -> Vec<String> {
        let mut vs: Vec<String> = Vec::new();
        for m in self.terms.keys() {
            for v in m.0.keys() {
                if !vs.contains(v) {
                    vs.push(v.clone());
                }
            }
        }
        vs.sort();
        vs
    }

    /// Exact division; `None` when `o` does not divide `self`.
    pub fn div_exact(&self, o: &Self) -> Option<Self> {
        assert!(!o.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        let (lm, lc) = {
            let (m, c) = o.leading().unwrap();
            (m.clone(), c.clone())
        };
        while !rem.is_zero() {
            let (rm, rc) = {
                let (m, c) = rem.leading().unwrap();
                (m.clone(), c.clone())
            };
            let qm = rm.div(&lm)?;
            let qc = rc.div(&lc);
            let mut t = Poly::zero();
            t.terms.insert(qm, qc);
            quot = quot.add(&t);
            rem = rem.sub(&t.mul(o));
        }
        Some(quot)
    }

    pub fn eval(&self, assign: &BTreeMap<String, f64>) -> Option<Complex64> {
        let mut total = Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let mut v = c.to_complex();
            for (name, e) in &m.0 {
                let x = *assign.get(name)?;
                v *= Complex64::new(x.powi(*e as i32), 0.0);
            }
            total += v;
        }
        Some(total)
    }

    /// Substitute a variable by a polynomial.
    pub fn subst(&self, name: &str, value: &Poly) -> Poly {
        let mut r = Poly::zero();
        for (m, c) in &self.terms {
            let e = m.0.get(name).copied().unwrap_or(0);
            let mut rest = m.clone();
            rest.0.remove(name);
            let mut t = Poly::zero();
            t.terms.insert(rest, c.clone());
            r = r.add(&t.mul(&value.pow(e)));
        }
        r
    }
}

// ---------------------------------------------------------------------------
// gcd via primitive pseudo-remainder sequences

/// View `p` as a univariate polynomial in `v` with `Poly` coefficients.
fn as_univariate(p: &Poly, v: &str) -> Vec<Poly> {
    let mut coeffs: Vec<Poly> = Vec::new();
    for (m, c) in &p.terms {
        let e = m.0.get(v).copied().unwrap_or(0) as usize;
        if coeffs.len() <= e {
            coeffs.resize(e + 1, Poly::zero());
        }
        let mut rest = m.clone();
        rest.0.remove(v);
        coeffs[e].insert(rest, c.clone());
    }
    while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
        coeffs.pop();
    }
    coeffs
}

fn from_univariate(coeffs: &[Poly], v: &str) -> Poly {
    let mut r = Poly::zero();
    for (e, c) in coeffs.iter().enumerate() {
        let mut pow = Mono::one();
        if e > 0 {
            pow.0.insert(v.to_string(), e as u32);
        }
        for (m, k) in &c.terms {
            r.insert(m.mul(&pow), k.clone());
        }
    }
    r
}

fn uni_degree(c: &[Poly]) -> usize {
    c.len().saturating_sub(1)
}

fn uni_mul_poly(c: &[Poly], f: &Poly) -> Vec<Poly> {
    c.iter().map(|x| x.mul(f)).collect()
}

fn uni_shift_sub(a: &mut Vec<Poly>, b: &[Poly], shift: usize, f: &Poly) {
    // a -= x^shift * f * b
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, Poly::zero());
    }
    for (i, bc) in b.iter().enumerate() {
        a[i + shift] = a[i + shift].sub(&bc.mul(f));
    }
    while a.last().map(|c| c.is_zero()).unwrap_or(false) {
        a.pop();
    }
}

/// Pseudo-remainder of `a` by `b` in the main variable.
fn pseudo_rem(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let mut r: Vec<Poly> = a.to_vec();
    let db = uni_degree(b);
    let lb = b.last().unwrap().clone();
    while !r.is_empty() && uni_degree(&r) >= db {
        let dr = uni_degree(&r);
        let lr = r.last().unwrap().clone();
        // r = lb * r - lr * x^(dr-db) * b
        r = uni_mul_poly(&r, &lb);
        uni_shift_sub(&mut r, b, dr - db, &lr);
    }
    r
}

/// Content: gcd of all coefficients (a polynomial in the remaining variables).
fn content(c: &[Poly]) -> Poly {
    let mut g = Poly::zero();
    for x in c {
        if x.is_zero() {
            continue;
        }
        g = if g.is_zero() { x.clone() } else { gcd(&g, x) };
        if g.is_constant() {
            break;
        }
    }
    if g.is_zero() {
        Poly::one()
    } else {
        g
    }
}

fn normalize_monic(p: &Poly) -> Poly {
    match p.leading() {
        None => Poly::zero(),
        Some((_, c)) => {
            let inv = c.inv();
            p.scale(&inv)
        }
    }
}

/// Polynomial gcd over Q(i), normalized to have leading coefficient 1.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return normalize_monic(b);
    }
    if b.is_zero() {
        return normalize_monic(a);
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    // Pick the lexicographically smallest variable present in either.
    let mut vars = a.variables();
    for v in b.variables() {
        if !vars.contains(&v) {
            vars.push(v);
        }
    }
    vars.sort();
    let v = vars[0].clone();

    let ua = as_univariate(a, &v);
    let ub = as_univariate(b, &v);
    if ua.len() == 1 {
        // `a` does not involve v after all; gcd with content of b.
        return normalize_monic(&gcd(&ua[0], &content(&ub)));
    }
    if ub.len() == 1 {
        return normalize_monic(&gcd(&ub[0], &content(&ua)));
    }

    let ca = content(&ua);
    let cb = content(&ub);
    let cg = gcd(&ca, &cb);
    let pa: Vec<Poly> = ua.iter().map(|x| x.div_exact(&ca).unwrap()).collect();
    let pb: Vec<Poly> = ub.iter().map(|x| x.div_exact(&cb).unwrap()).collect();

    let (mut f, mut g) = if uni_degree(&pa) >= uni_degree(&pb) {
        (pa, pb)
    } else {
        (pb, pa)
    };
    loop {
        let r = pseudo_rem(&f, &g);
        if r.is_empty() {
            break;
        }
        let cr = content(&r);
        let pr: Vec<Poly> = r.iter().map(|x| x.div_exact(&cr).unwrap()).collect();
        f = g;
        g = pr;
        if uni_degree(&g) == 0 {
            // Primitive constant in the main variable: gcd is the content part.
            return normalize_monic(&cg);
        }
    }
    let prim = from_univariate(&g, &v);
    normalize_monic(&cg.mul(&prim))
}

// ---------------------------------------------------------------------------

/// Reduced fraction of polynomials over Q(i); denominator is monic in
/// graded-lex order, which pins a unique representative.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Frac {
    pub num: Poly,
    pub den: Poly,
}

impl Default for Frac {
    fn default() -> Self {
        Frac {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }
}

impl Frac {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut f = Frac { num, den };
        f.reduce();
        f
    }
    pub fn zero() -> Self {
        Frac::default()
    }
    pub fn one() -> Self {
        Frac {
            num: Poly::one(),
            den: Poly::one(),
        }
    }
    pub fn from_poly(p: Poly) -> Self {
        Frac {
            num: p,
            den: Poly::one(),
        }
    }
    pub fn constant(c: GaussRat) -> Self {
        Frac::from_poly(Poly::constant(c))
    }
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    pub fn as_constant(&self) -> Option<GaussRat> {
        if self.den == Poly::one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = Poly::one();
            return;
        }
        let g = gcd(&self.num, &self.den);
        if !g.is_constant() {
            self.num = self.num.div_exact(&g).unwrap();
            self.den = self.den.div_exact(&g).unwrap();
        }
        let lc = self.den.leading().unwrap().1.clone();
        if lc != GaussRat::one() {
            let inv = lc.inv();
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        Frac::new(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }
    pub fn sub(&self, o: &Self) -> Self {
        Frac::new(
            self.num.mul(&o.den).sub(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }
    pub fn neg(&self) -> Self {
        Frac {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    pub fn mul(&self, o: &Self) -> Self {
        Frac::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "division by zero fraction");
        Frac::new(self.den.clone(), self.num.clone())
    }
    pub fn div(&self, o: &Self) -> Self {
        self.mul(&o.inv())
    }
    pub fn scale(&self, c: &GaussRat) -> Self {
        Frac {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn conj_map(&self, map: &dyn Fn(&str) -> String) -> Self {
        let conj_poly = |p: &Poly| {
            let mut r = Poly::zero();
            for (m, c) in &p.terms {
                let mut mm = BTreeMap::new();
                for (v, e) in &m.0 {
                    *mm.entry(map(v)).or_insert(0) += e;
                }
                r.insert(Mono(mm), c.conj());
            }
            r
        };
        Frac::new(conj_poly(&self.num), conj_poly(&self.den))
    }

    pub fn eval(&self, assign: &BTreeMap<String, f64>) -> Option<Complex64> {
        let n = self.num.eval(assign)?;
        let d = self.den.eval(assign)?;
        Some(n / d)
    }

    pub fn subst(&self, name: &str, value: &Frac) -> Frac {
        // Clearing denominators: substitute into num and den separately with
        // the fraction written as p/q, tracking powers of q.
        let sub_poly = |p: &Poly| -> Frac {
            let mut acc = Frac::zero();
            for (m, c) in &p.terms {
                let e = m.0.get(name).copied().unwrap_or(0);
                let mut rest = m.clone();
                rest.0.remove(name);
                let mut base = Poly::zero();
                base.terms.insert(rest, c.clone());
                let mut t = Frac::from_poly(base);
                for _ in 0..e {
                    t = t.mul(value);
                }
                acc = acc.add(&t);
            }
            acc
        };
        let n = sub_poly(&self.num);
        let d = sub_poly(&self.den);
        n.div(&d)
    }
}

impl fmt::Display for Poly {
    fmt, Display wanted here
}
