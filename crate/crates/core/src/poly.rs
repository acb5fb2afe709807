//! Dense univariate polynomials over a field, with Sturm-sequence real root
//! isolation. Used with exact rationals so isolation is deterministic.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Coefficient field: exact or floating.
pub trait Field: Clone + PartialOrd + Signed + std::fmt::Debug {}
impl<F: Clone + PartialOrd + Signed + std::fmt::Debug> Field for F {}

/// `Σ coeffs[i] xⁱ`, normalized so the leading coefficient is nonzero.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    /// `x - r`
    pub fn linear_root(r: F) -> Self {
        Self::new(vec![-r, F::one()])
    }

    pub fn x() -> Self {
        Self::new(vec![F::zero(), F::one()])
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> F {
        self.coeffs.last().cloned().unwrap_or_else(F::zero)
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        let mut out = Vec::with_capacity(self.coeffs.len().saturating_sub(1));
        let mut k = F::zero();
        for c in self.coeffs.iter().skip(1) {
            k = k + F::one();
            out.push(c.clone() * k.clone());
        }
        Self::new(out)
    }

    pub fn scale(&self, s: &F) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(F::one()), |acc, _| &acc * self)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lead = self.leading();
        Self::new(self.coeffs.iter().map(|c| c.clone() / lead.clone()).collect())
    }

    /// Euclidean division `self = q·d + r`.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.coeffs.len() - 1;
        let lead = d.leading();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::new(Vec::new()), self.clone());
        }
        let mut quot = vec![F::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let f = rem[i + dd].clone() / lead.clone();
            for (j, c) in d.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].clone() - f.clone() * c.clone();
            }
            quot[i] = f;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `p / gcd(p, p')`: same real roots, all simple.
    pub fn square_free(&self) -> Self {
        let g = self.gcd(&self.derivative());
        if g.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        self.div_rem(&g).0
    }

    pub fn sturm_chain(&self) -> Vec<Self> {
        let mut chain = vec![self.clone(), self.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let r = chain[n - 2].div_rem(&chain[n - 1]).1;
            if r.is_zero() {
                break;
            }
            chain.push(-&r);
        }
        chain
    }

    /// Cauchy bound: every real root has `|x| < bound`.
    pub fn root_bound(&self) -> F {
        let lead = self.leading().abs();
        let mut m = F::zero();
        for c in &self.coeffs[..self.coeffs.len().saturating_sub(1)] {
            let r = c.abs() / lead.clone();
            if r > m {
                m = r;
            }
        }
        m + F::one()
    }
}

fn sign_changes<F: Field>(chain: &[Poly<F>], x: &F) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for p in chain {
        let v = p.eval(x);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
    }
    changes
}

/// Number of distinct real roots in `(a, b]` by Sturm's theorem.
pub fn count_roots<F: Field>(chain: &[Poly<F>], a: &F, b: &F) -> usize {
    sign_changes(chain, a).saturating_sub(sign_changes(chain, b))
}

impl Poly<BigRational> {
    pub fn from_f64(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rational(c)).collect())
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coeffs.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect()
    }

    /// Isolates every distinct real root in `(lo, hi)` to an interval of
    /// width below `width`, each containing exactly one root.
    pub fn isolate_roots(&self, lo: &BigRational, hi: &BigRational, width: f64) -> Result<Vec<(BigRational, BigRational)>> {
        if self.is_zero() {
            return Err(Error::RootIsolation("zero polynomial".into()));
        }
        let sf = self.square_free();
        let chain = sf.sturm_chain();
        let width = rational(width);
        let two = BigRational::from_integer(BigInt::from(2));
        let mut stack = vec![(lo.clone(), hi.clone())];
        let mut out = Vec::new();
        let mut steps = 0usize;
        while let Some((a, b)) = stack.pop() {
            steps += 1;
            if steps > 100_000 {
                return Err(Error::RootIsolation("bisection budget exhausted".into()));
            }
            let n = count_roots(&chain, &a, &b);
            if n == 0 {
                continue;
            }
            if n == 1 && &b - &a < width {
                out.push((a, b));
                continue;
            }
            let mid = (&a + &b) / &two;
            if sf.eval(&mid).is_zero() {
                // exact root: keep it as a degenerate interval and split around it
                let eps = &width / &two / &two;
                out.push((&mid - &eps, mid.clone()));
                stack.push((&mid + &eps, b));
                stack.push((a, &mid - &eps));
                let inner = count_roots(&chain, &(&mid - &eps), &(&mid + &eps));
                if inner != 1 {
                    return Err(Error::RootIsolation(format!("roots not separable near {}", mid.to_f64().unwrap_or(f64::NAN))));
                }
                continue;
            }
            if &b - &a < &width / &two / &two / &two {
                return Err(Error::RootIsolation(format!(
                    "{n} roots not separable at width {}",
                    (&b - &a).to_f64().unwrap_or(f64::NAN)
                )));
            }
            stack.push((mid.clone(), b));
            stack.push((a, mid));
        }
        out.sort_by(|x, y| x.0.cmp(&y.0));
        Ok(out)
    }

    /// Real roots as `f64`, isolated exactly then polished by Newton steps.
    pub fn real_roots(&self, width: f64) -> Result<Vec<f64>> {
        let sf = self.square_free();
        let bound = sf.root_bound();
        let intervals = sf.isolate_roots(&-bound.clone(), &bound, width)?;
        let fp: Vec<f64> = sf.monic().to_f64();
        let dp: Vec<f64> = sf.monic().derivative().to_f64();
        let eval = |c: &[f64], x: f64| c.iter().rev().fold(0.0, |acc, &k| acc * x + k);
        Ok(intervals
            .into_iter()
            .map(|(a, b)| {
                let lo = a.to_f64().unwrap_or(f64::NAN);
                let hi = b.to_f64().unwrap_or(f64::NAN);
                let mut x = 0.5 * (lo + hi);
                for _ in 0..4 {
                    let d = eval(&dp, x);
                    if d == 0.0 {
                        break;
                    }
                    let next = x - eval(&fp, x) / d;
                    if !(next >= lo && next <= hi) || next == x {
                        break;
                    }
                    x = next;
                }
                x
            })
            .collect())
    }
}

/// Exact rational value of a finite `f64`.
pub fn rational(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite value")
}

impl<F: Field> Add for &Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: Self) -> Poly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(
            (0..n)
                .map(|i| {
                    self.coeffs.get(i).cloned().unwrap_or_else(F::zero)
                        + rhs.coeffs.get(i).cloned().unwrap_or_else(F::zero)
                })
                .collect(),
        )
    }
}

impl<F: Field> Sub for &Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: Self) -> Poly<F> {
        self + &(-rhs)
    }
}

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<F: Field> Mul for &Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: Self) -> Poly<F> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::new(Vec::new());
        }
        let mut out = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}
