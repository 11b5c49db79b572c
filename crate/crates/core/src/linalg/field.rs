//! Exact computable fields: prime fields, the rationals, and simple algebraic
//! extensions of either.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// A field element. Scalars carry no reference to their field; every
/// operation goes through a [`Field`], which knows how to interpret them.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    /// Residue in `0..p`.
    Fp(u64),
    /// Reduced fraction with positive denominator.
    Q(BigRational),
    /// Coefficients over the base field, lowest power first, length equal to
    /// the extension degree.
    Ext(Vec<Scalar>),
}

#[derive(Debug, PartialEq, Eq, Hash)]
pub struct Extension {
    base: Field,
    /// Monic minimal polynomial, lowest coefficient first.
    minpoly: Vec<Scalar>,
}

/// A ground field. Cheap to clone.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Prime(u64),
    Rational,
    Extension(Arc<Extension>),
}

pub type FieldSpec = Field;

pub fn is_prime(n: u64) -> bool {
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

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NonPrimeCharacteristic(p));
        }
        if p >= 1 << 31 {
            return Err(Error::Unsupported(format!("prime {p} is too large")));
        }
        Ok(Field::Prime(p))
    }

    pub fn rationals() -> Field {
        Field::Rational
    }

    /// Simple extension `base[θ]/(minpoly)`. `minpoly` is given lowest
    /// coefficient first and must be monic of degree ≥ 1. Irreducibility is
    /// verified for degree ≤ 4.
    pub fn extension(base: Field, minpoly: Vec<Scalar>) -> Result<Field> {
        if matches!(base, Field::Extension(_)) {
            return Err(Error::Unsupported("towers of extensions".into()));
        }
        if minpoly.len() < 2 {
            return Err(Error::InvalidField("minimal polynomial must have degree >= 1".into()));
        }
        let lead = minpoly.last().unwrap();
        if !base.is_one(lead) {
            return Err(Error::InvalidField("minimal polynomial must be monic".into()));
        }
        if minpoly.len() == 2 {
            // degree one: the extension is the base field itself, but keep the
            // representation so that the Galois machinery sees a degree-1 case
        } else if minpoly.len() <= 5 && !base.is_irreducible(&minpoly)? {
            return Err(Error::InvalidField("minimal polynomial is reducible".into()));
        }
        Ok(Field::Extension(Arc::new(Extension { base, minpoly })))
    }

    /// `ℚ(i)`, the model of `ℂ` over the model `ℚ` of `ℝ`.
    pub fn gaussian_rationals() -> Field {
        let q = Field::Rational;
        Field::extension(q.clone(), vec![q.one(), q.zero(), q.one()]).expect("x^2+1 is irreducible")
    }

    /// `GF(p^n)` from a monic minimal polynomial over `GF(p)` given as integers.
    pub fn finite(p: u64, minpoly: &[i64]) -> Result<Field> {
        let base = Field::prime(p)?;
        let coeffs = minpoly.iter().map(|&c| base.from_i64(c)).collect();
        Field::extension(base, coeffs)
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Prime(p) => *p,
            Field::Rational => 0,
            Field::Extension(e) => e.base.characteristic(),
        }
    }

    /// Degree over the prime field (1 for prime fields and ℚ).
    pub fn degree(&self) -> usize {
        match self {
            Field::Extension(e) => e.minpoly.len() - 1,
            _ => 1,
        }
    }

    pub fn base(&self) -> Field {
        match self {
            Field::Extension(e) => e.base.clone(),
            f => f.clone(),
        }
    }

    pub fn minpoly(&self) -> Option<&[Scalar]> {
        match self {
            Field::Extension(e) => Some(&e.minpoly),
            _ => None,
        }
    }

    /// Number of elements, when finite.
    pub fn order(&self) -> Option<u64> {
        match self {
            Field::Prime(p) => Some(*p),
            Field::Rational => None,
            Field::Extension(e) => e.base.order().map(|q| q.pow(self.degree() as u32)),
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Prime(_) => Scalar::Fp(0),
            Field::Rational => Scalar::Q(BigRational::zero()),
            Field::Extension(e) => Scalar::Ext(vec![e.base.zero(); self.degree()]),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Prime(p) => Scalar::Fp(n.rem_euclid(*p as i64) as u64),
            Field::Rational => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            Field::Extension(e) => {
                let mut v = vec![e.base.zero(); self.degree()];
                v[0] = e.base.from_i64(n);
                Scalar::Ext(v)
            }
        }
    }

    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Scalar> {
        let d = self.from_i64(den);
        self.div(&self.from_i64(num), &d)
    }

    /// Embeds a base-field scalar into this field (identity for non-extensions).
    pub fn embed(&self, base_scalar: &Scalar) -> Scalar {
        match self {
            Field::Extension(e) => {
                let mut v = vec![e.base.zero(); self.degree()];
                v[0] = base_scalar.clone();
                Scalar::Ext(v)
            }
            _ => base_scalar.clone(),
        }
    }

    /// The generator `θ` of a simple extension.
    pub fn generator(&self) -> Option<Scalar> {
        match self {
            Field::Extension(e) => {
                let n = self.degree();
                let mut v = vec![e.base.zero(); n];
                if n == 1 {
                    v[0] = e.base.neg(&e.minpoly[0]);
                } else {
                    v[1] = e.base.one();
                }
                Some(Scalar::Ext(v))
            }
            _ => None,
        }
    }

    pub fn contains(&self, a: &Scalar) -> bool {
        match (self, a) {
            (Field::Prime(p), Scalar::Fp(x)) => x < p,
            (Field::Rational, Scalar::Q(_)) => true,
            (Field::Extension(e), Scalar::Ext(v)) => {
                v.len() == self.degree() && v.iter().all(|c| e.base.contains(c))
            }
            _ => false,
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Fp(x) => *x == 0,
            Scalar::Q(q) => q.is_zero(),
            Scalar::Ext(v) => v.iter().all(|c| self.base().is_zero(c)),
        }
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        *a == self.one()
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp((x + y) % p),
            (Field::Rational, Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x + y),
            (Field::Extension(e), Scalar::Ext(x), Scalar::Ext(y)) => {
                Scalar::Ext(x.iter().zip(y).map(|(u, v)| e.base.add(u, v)).collect())
            }
            _ => panic!("scalar does not belong to field {self}"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (Field::Prime(p), Scalar::Fp(x)) => Scalar::Fp((p - x) % p),
            (Field::Rational, Scalar::Q(x)) => Scalar::Q(-x),
            (Field::Extension(e), Scalar::Ext(x)) => {
                Scalar::Ext(x.iter().map(|u| e.base.neg(u)).collect())
            }
            _ => panic!("scalar does not belong to field {self}"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => {
                Scalar::Fp(((*x as u128 * *y as u128) % *p as u128) as u64)
            }
            (Field::Rational, Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x * y),
            (Field::Extension(e), Scalar::Ext(x), Scalar::Ext(y)) => Scalar::Ext(e.mul(x, y)),
            _ => panic!("scalar does not belong to field {self}"),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        Ok(match (self, a) {
            (Field::Prime(p), Scalar::Fp(x)) => Scalar::Fp(pow_mod(*x, p - 2, *p)),
            (Field::Rational, Scalar::Q(x)) => Scalar::Q(x.recip()),
            (Field::Extension(e), Scalar::Ext(x)) => Scalar::Ext(e.inv(x)?),
            _ => panic!("scalar does not belong to field {self}"),
        })
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &Scalar, mut e: u64) -> Scalar {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Small random element; rationals and extension coefficients are drawn
    /// from `-3..=3`.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        match self {
            Field::Prime(p) => Scalar::Fp(rng.gen_range(0..*p)),
            Field::Rational => self.from_i64(rng.gen_range(-3..=3)),
            Field::Extension(e) => {
                Scalar::Ext((0..self.degree()).map(|_| e.base.random(rng)).collect())
            }
        }
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        loop {
            let s = self.random(rng);
            if !self.is_zero(&s) {
                return s;
            }
        }
    }

    /// All elements, for finite fields of modest size.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match self {
            Field::Prime(p) => Some((0..*p).map(Scalar::Fp).collect()),
            Field::Rational => None,
            Field::Extension(e) => {
                let base = e.base.elements()?;
                let mut out = vec![vec![]];
                for _ in 0..self.degree() {
                    let mut next = Vec::new();
                    for prefix in &out {
                        for b in &base {
                            let mut v: Vec<Scalar> = prefix.clone();
                            v.push(b.clone());
                            next.push(v);
                        }
                    }
                    out = next;
                }
                Some(out.into_iter().map(Scalar::Ext).collect())
            }
        }
    }

    pub fn display(&self, a: &Scalar) -> String {
        match a {
            Scalar::Fp(x) => x.to_string(),
            Scalar::Q(q) => {
                if q.is_integer() {
                    q.numer().to_string()
                } else {
                    q.to_string()
                }
            }
            Scalar::Ext(v) => {
                let base = self.base();
                let terms: Vec<String> = v
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !base.is_zero(c))
                    .map(|(i, c)| match i {
                        0 => base.display(c),
                        1 => format!("{}*θ", base.display(c)),
                        _ => format!("{}*θ^{i}", base.display(c)),
                    })
                    .collect();
                if terms.is_empty() {
                    "0".into()
                } else {
                    terms.join("+")
                }
            }
        }
    }

    /// Signed small-integer view of a scalar of a prime field or ℚ, used for
    /// deterministic test output. `None` for non-integers.
    pub fn as_i64(&self, a: &Scalar) -> Option<i64> {
        match a {
            Scalar::Fp(x) => Some(*x as i64),
            Scalar::Q(q) if q.is_integer() => q.numer().to_i64(),
            _ => None,
        }
    }

    fn is_irreducible(&self, poly: &[Scalar]) -> Result<bool> {
        let deg = poly.len() - 1;
        match self {
            Field::Prime(_) => {
                let elems = self.elements().unwrap();
                if elems.iter().any(|x| self.is_zero(&self.eval_poly(poly, x))) {
                    return Ok(false);
                }
                if deg == 4 {
                    for b in &elems {
                        for c in &elems {
                            let quad = vec![c.clone(), b.clone(), self.one()];
                            if self.poly_divides(&quad, poly) {
                                return Ok(false);
                            }
                        }
                    }
                }
                Ok(true)
            }
            Field::Rational => {
                let ints = integer_coefficients(poly).ok_or_else(|| {
                    Error::Unsupported("rational minimal polynomials need integer coefficients".into())
                })?;
                for r in rational_root_candidates(&ints) {
                    if self.is_zero(&self.eval_poly(poly, &Scalar::Q(r))) {
                        return Ok(false);
                    }
                }
                if deg == 4 {
                    let a0 = ints[0].abs();
                    let bound: i64 = ints.iter().map(|c| c.abs()).max().unwrap_or(1) * 2 + 2;
                    for c in divisors(a0).into_iter().flat_map(|d| [d, -d]) {
                        for b in -bound..=bound {
                            let quad = vec![self.from_i64(c), self.from_i64(b), self.one()];
                            if self.poly_divides(&quad, poly) {
                                return Ok(false);
                            }
                        }
                    }
                }
                Ok(true)
            }
            Field::Extension(_) => Err(Error::Unsupported("towers of extensions".into())),
        }
    }

    fn eval_poly(&self, poly: &[Scalar], x: &Scalar) -> Scalar {
        poly.iter().rev().fold(self.zero(), |acc, c| self.add(&self.mul(&acc, x), c))
    }

    /// Whether the monic `d` divides `p` (both lowest coefficient first).
    fn poly_divides(&self, d: &[Scalar], p: &[Scalar]) -> bool {
        let mut r = p.to_vec();
        let dd = d.len() - 1;
        while r.len() > dd {
            let lead = r.last().unwrap().clone();
            let shift = r.len() - 1 - dd;
            for (i, c) in d.iter().enumerate() {
                r[i + shift] = self.sub(&r[i + shift], &self.mul(&lead, c));
            }
            r.pop();
        }
        r.iter().all(|c| self.is_zero(c))
    }
}

impl Extension {
    fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let f = &self.base;
        let n = x.len();
        let mut prod = vec![f.zero(); 2 * n - 1];
        for (i, a) in x.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                prod[i + j] = f.add(&prod[i + j], &f.mul(a, b));
            }
        }
        // reduce modulo the monic minimal polynomial
        for k in (n..prod.len()).rev() {
            let lead = prod[k].clone();
            if f.is_zero(&lead) {
                continue;
            }
            for (i, c) in self.minpoly[..n].iter().enumerate() {
                prod[k - n + i] = f.sub(&prod[k - n + i], &f.mul(&lead, c));
            }
            prod[k] = f.zero();
        }
        prod.truncate(n);
        prod
    }

    /// Inverse by solving `x · y = 1` with the multiplication-by-`x` matrix.
    fn inv(&self, x: &[Scalar]) -> Result<Vec<Scalar>> {
        let f = &self.base;
        let n = x.len();
        // column j = x · θ^j
        let mut a: Vec<Vec<Scalar>> = vec![vec![f.zero(); n + 1]; n];
        for j in 0..n {
            let mut basis = vec![f.zero(); n];
            basis[j] = f.one();
            let col = self.mul(x, &basis);
            for i in 0..n {
                a[i][j] = col[i].clone();
            }
        }
        a[0][n] = f.one();
        for c in 0..n {
            let piv = (c..n).find(|&r| !f.is_zero(&a[r][c])).ok_or(Error::DivisionByZero)?;
            a.swap(c, piv);
            let inv = f.inv(&a[c][c])?;
            for k in c..=n {
                a[c][k] = f.mul(&a[c][k], &inv);
            }
            for r in 0..n {
                if r != c && !f.is_zero(&a[r][c]) {
                    let factor = a[r][c].clone();
                    for k in c..=n {
                        let t = f.mul(&factor, &a[c][k]);
                        a[r][k] = f.sub(&a[r][k], &t);
                    }
                }
            }
        }
        Ok(a.into_iter().map(|row| row[n].clone()).collect())
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * b as u128) % m as u128) as u64;
        }
        b = ((b as u128 * b as u128) % m as u128) as u64;
        e >>= 1;
    }
    acc
}

fn integer_coefficients(poly: &[Scalar]) -> Option<Vec<i64>> {
    poly.iter()
        .map(|c| match c {
            Scalar::Q(q) if q.is_integer() => q.numer().to_i64(),
            _ => None,
        })
        .collect()
}

fn divisors(n: i64) -> Vec<i64> {
    if n == 0 {
        return vec![0];
    }
    (1..=n).filter(|d| n % d == 0).collect()
}

fn rational_root_candidates(ints: &[i64]) -> Vec<BigRational> {
    // monic: rational roots are integers dividing the constant term
    let a0 = ints[0].abs();
    if a0 == 0 {
        return vec![BigRational::zero()];
    }
    divisors(a0)
        .into_iter()
        .flat_map(|d| [d, -d])
        .map(|d| BigRational::from_integer(BigInt::from(d)))
        .collect()
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Prime(p) => write!(f, "GF({p})"),
            Field::Rational => write!(f, "Q"),
            Field::Extension(e) => {
                let terms: Vec<String> = e
                    .minpoly
                    .iter()
                    .enumerate()
                    .rev()
                    .filter(|(_, c)| !e.base.is_zero(c))
                    .map(|(i, c)| format!("{}x^{i}", e.base.display(c)))
                    .collect();
                match &e.base {
                    Field::Prime(p) => write!(f, "GF({p}^{};{})", self.degree(), terms.join("+")),
                    _ => write!(f, "{}({})", e.base, terms.join("+")),
                }
            }
        }
    }
}

/// Parses `"a/b"` or `"a"` into a reduced rational.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

/// Reduced-form `"a/b"` rendering used by the JSON encoding.
pub fn rational_string(q: &BigRational) -> String {
    let (n, d) = (q.numer(), q.denom());
    let g = n.gcd(d);
    let (n, d) = if g.is_one() || g.is_zero() { (n.clone(), d.clone()) } else { (n / &g, d / &g) };
    format!("{n}/{d}")
}
