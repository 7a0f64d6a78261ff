//! Univariate polynomials, used to split endomorphisms by their minimal
//! polynomial.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use super::field::Field;
use super::rational::Rational;

/// Coefficients in increasing degree, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> Poly<F> {
    pub fn new(field: F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn monomial(field: F, deg: usize) -> Self {
        let mut c = vec![field.zero(); deg + 1];
        c[deg] = field.one();
        Poly { field, coeffs: c }
    }

    /// `t - a`
    pub fn linear(field: F, a: &F::Elem) -> Self {
        Self::new(field, vec![field.neg(a), field.one()])
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn lead(&self) -> &F::Elem {
        self.coeffs.last().expect("nonzero polynomial")
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let f = self.field;
        let inv = f.inv(self.lead()).unwrap();
        Poly { field: f, coeffs: self.coeffs.iter().map(|c| f.mul(c, &inv)).collect() }
    }

    pub fn eval(&self, x: &F::Elem) -> F::Elem {
        let f = self.field;
        self.coeffs.iter().rev().fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }

    pub fn sub(&self, other: &Self) -> Self {
        let f = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).cloned().unwrap_or_else(|| f.zero());
                let b = other.coeffs.get(i).cloned().unwrap_or_else(|| f.zero());
                f.sub(&a, &b)
            })
            .collect();
        Self::new(f, c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let f = self.field;
        if self.is_zero() || other.is_zero() {
            return Self::new(f, vec![]);
        }
        let mut c = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] = f.add(&c[i + j], &f.mul(a, b));
            }
        }
        Self::new(f, c)
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let f = self.field;
        let dd = d.degree().expect("division by zero polynomial");
        let inv = f.inv(d.lead()).unwrap();
        let mut r = self.coeffs.clone();
        let mut q = vec![f.zero(); r.len().saturating_sub(dd)];
        while r.len() > dd {
            let k = r.len() - 1 - dd;
            let c = f.mul(r.last().unwrap(), &inv);
            for (j, dj) in d.coeffs.iter().enumerate() {
                r[k + j] = f.sub(&r[k + j], &f.mul(&c, dj));
            }
            q[k] = c;
            r.pop();
            while r.last().is_some_and(|c| f.is_zero(c)) {
                r.pop();
            }
        }
        (Self::new(f, q), Self::new(f, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        let f = self.field;
        let c = self.coeffs.iter().enumerate().skip(1).map(|(i, c)| f.mul(c, &f.from_i64(i as i64))).collect();
        Self::new(f, c)
    }

    /// `self^e mod m`
    pub fn pow_mod(&self, mut e: u64, m: &Self) -> Self {
        let f = self.field;
        let mut base = self.rem(m);
        let mut acc = Self::new(f, vec![f.one()]).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    /// A monic factor of strictly smaller positive degree, if one is found.
    ///
    /// Checks, in order: a factor `t`, the repeated part `gcd(p, p')`, and
    /// linear factors (rational roots over Q, roots in the field over GF(p)).
    /// Returns `None` for polynomials with no such factor, which includes
    /// every irreducible one.
    pub fn proper_factor(&self) -> Option<Self> {
        let f = self.field;
        let deg = self.degree()?;
        if deg < 2 {
            return None;
        }
        if f.is_zero(&self.coeffs[0]) {
            return Some(Self::monomial(f, 1));
        }
        let g = self.gcd(&self.derivative());
        if let Some(d) = g.degree() {
            if d >= 1 && d < deg {
                return Some(g);
            }
        }
        self.find_root().map(|r| Self::linear(f, &r))
    }

    fn find_root(&self) -> Option<F::Elem> {
        let f = self.field;
        match f.characteristic() {
            0 => rational_root(f, self),
            p => {
                if p <= 1 << 16 {
                    return (0..p).map(|i| f.nth(i)).find(|x| f.is_zero(&self.eval(x)));
                }
                // roots are those of gcd(p, t^p - t); split it by
                // gcd(g, (t + a)^((p-1)/2) - 1) for a = 0, 1, 2, ...
                let t = Self::monomial(f, 1);
                let tp = t.pow_mod(p, self);
                let mut g = self.gcd(&tp.sub(&t));
                if g.degree()? == 0 {
                    return None;
                }
                let mut a = 0i64;
                while g.degree()? > 1 && a < 64 {
                    let shifted = Self::new(f, vec![f.from_i64(a), f.one()]);
                    let h = shifted.pow_mod((p - 1) / 2, &g).sub(&Self::new(f, vec![f.one()]));
                    let d = g.gcd(&h);
                    if let Some(dd) = d.degree() {
                        if dd >= 1 && dd < g.degree()? {
                            g = d;
                        }
                    }
                    a += 1;
                }
                if g.degree()? == 1 {
                    let g = g.monic();
                    Some(f.neg(&g.coeffs[0]))
                } else {
                    None
                }
            }
        }
    }
}

/// Candidate rational roots `p/q` with `p | a0`, `q | an` after clearing
/// denominators. Gives up (None) when a coefficient is too large to factor
/// by trial division.
fn rational_root<F: Field>(f: F, poly: &Poly<F>) -> Option<F::Elem> {
    let rats: Vec<Rational> = poly.coeffs.iter().map(|c| f.as_rational(c)).collect::<Option<_>>()?;
    let mut lcm = BigInt::from(1);
    for r in &rats {
        lcm = lcm.lcm(&r.denom());
    }
    let ints: Vec<BigInt> = rats.iter().map(|r| r.numer() * (&lcm / r.denom())).collect();
    let a0 = ints.first()?.abs().to_u64()?;
    let an = ints.last()?.abs().to_u64()?;
    let limit = 1u64 << 40;
    if a0 > limit || an > limit {
        return None;
    }
    let (dp, dq) = (divisors(a0), divisors(an));
    for q in &dq {
        for p in &dp {
            for sign in [1i64, -1] {
                if (*p as u128).gcd(&(*q as u128)) != 1 {
                    continue;
                }
                let cand = Rational::from_big(num_rational::BigRational::new(
                    BigInt::from(sign) * BigInt::from(*p),
                    BigInt::from(*q),
                ));
                let x = f.parse(&cand.to_string()).ok()?;
                if f.is_zero(&poly.eval(&x)) {
                    return Some(x);
                }
            }
        }
    }
    None
}

fn divisors(n: u64) -> Vec<u64> {
    if n == 0 {
        return vec![];
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}
