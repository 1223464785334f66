//! Bivariate power series truncated in both variables, over exact rationals.
//!
//! Coefficients are stored ordinarily; `egf_coeff` applies the `n!`
//! normalisation for the exponential variable `x`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{guard, Error, Result};
use crate::nc::factorial;

pub const MAX_ORDER: usize = 8;

/// `Σ c[a][b] x^a t^b` for `a ≤ nx`, `b ≤ nt`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    nx: usize,
    nt: usize,
    c: Vec<Vec<BigRational>>,
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl TruncatedSeries {
    pub fn zero(nx: usize, nt: usize) -> Self {
        TruncatedSeries {
            nx,
            nt,
            c: vec![vec![BigRational::zero(); nt + 1]; nx + 1],
        }
    }

    pub fn monomial(nx: usize, nt: usize, a: usize, b: usize, coeff: BigRational) -> Self {
        let mut s = Self::zero(nx, nt);
        if a <= nx && b <= nt {
            s.c[a][b] = coeff;
        }
        s
    }

    pub fn one(nx: usize, nt: usize) -> Self {
        Self::monomial(nx, nt, 0, 0, BigRational::one())
    }

    pub fn x(nx: usize, nt: usize) -> Self {
        Self::monomial(nx, nt, 1, 0, BigRational::one())
    }

    pub fn t(nx: usize, nt: usize) -> Self {
        Self::monomial(nx, nt, 0, 1, BigRational::one())
    }

    pub fn orders(&self) -> (usize, usize) {
        (self.nx, self.nt)
    }

    pub fn coeff(&self, a: usize, b: usize) -> &BigRational {
        &self.c[a][b]
    }

    /// `a! [x^a t^b]`.
    pub fn egf_coeff(&self, a: usize, b: usize) -> BigRational {
        &self.c[a][b] * BigRational::from_integer(BigInt::from(factorial(a as u32)))
    }

    fn x_order(&self) -> usize {
        (0..=self.nx)
            .find(|&a| self.c[a].iter().any(|v| !v.is_zero()))
            .unwrap_or(self.nx + 1)
    }

    fn same_shape(&self, o: &Self) {
        assert_eq!((self.nx, self.nt), (o.nx, o.nt), "series orders differ");
    }

    pub fn add(&self, o: &Self) -> Self {
        self.same_shape(o);
        let mut s = self.clone();
        for a in 0..=self.nx {
            for b in 0..=self.nt {
                s.c[a][b] += &o.c[a][b];
            }
        }
        s
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&int(-1)))
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        let mut s = self.clone();
        s.c.iter_mut().flatten().for_each(|v| *v *= r);
        s
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.same_shape(o);
        let mut s = Self::zero(self.nx, self.nt);
        for a1 in 0..=self.nx {
            for b1 in 0..=self.nt {
                let u = &self.c[a1][b1];
                if u.is_zero() {
                    continue;
                }
                for a2 in 0..=self.nx - a1 {
                    for b2 in 0..=self.nt - b1 {
                        let v = &o.c[a2][b2];
                        if !v.is_zero() {
                            s.c[a1 + a2][b1 + b2] += u * v;
                        }
                    }
                }
            }
        }
        s
    }

    /// `Σ_m coeffs[m] g^m` for `g` without `x^0` terms.
    fn power_series_in(&self, coeffs: impl Fn(usize) -> BigRational) -> Result<Self> {
        if self.x_order() == 0 {
            return Err(Error::Series("argument has an x^0 term".into()));
        }
        let mut out = Self::one(self.nx, self.nt).scale(&coeffs(0));
        let mut p = Self::one(self.nx, self.nt);
        for m in 1..=self.nx {
            p = p.mul(self);
            out = out.add(&p.scale(&coeffs(m)));
        }
        Ok(out)
    }

    pub fn exp(&self) -> Result<Self> {
        self.power_series_in(|m| {
            BigRational::new(BigInt::one(), BigInt::from(factorial(m as u32)))
        })
    }

    /// `ln(1 + self)`.
    pub fn log1p(&self) -> Result<Self> {
        self.power_series_in(|m| {
            if m == 0 {
                BigRational::zero()
            } else {
                let s = if m % 2 == 1 { 1 } else { -1 };
                BigRational::new(BigInt::from(s), BigInt::from(m))
            }
        })
    }

    /// `(1 + self)^k` for any integer `k`.
    pub fn one_plus_pow(&self, k: i64) -> Result<Self> {
        self.power_series_in(|m| BigRational::from_integer(BigInt::from(crate::nc::binomial(k as i128, m as u32))))
    }

    /// `1 / self` when the `x^0` part is exactly 1.
    pub fn recip(&self) -> Result<Self> {
        let mut h = self.clone();
        let lead = (0..=self.nt).all(|b| h.c[0][b] == if b == 0 { BigRational::one() } else { BigRational::zero() });
        if !lead {
            return Err(Error::Series("reciprocal needs x^0 part equal to 1".into()));
        }
        h.c[0][0] = BigRational::zero();
        h.one_plus_pow(-1)
    }

    /// `self(g(x, t), t)`; `g` must have no `x^0` terms.
    pub fn compose_x(&self, g: &Self) -> Result<Self> {
        self.same_shape(g);
        if g.x_order() == 0 {
            return Err(Error::Series("inner series has an x^0 term".into()));
        }
        let mut out = Self::zero(self.nx, self.nt);
        let mut p = Self::one(self.nx, self.nt);
        for a in 0..=self.nx {
            let mut row = Self::zero(self.nx, self.nt);
            row.c[0] = self.c[a].clone();
            out = out.add(&row.mul(&p));
            p = p.mul(g);
        }
        Ok(out)
    }

    /// Compositional inverse in `x` of `f`, found by Newton iteration on
    /// `f(G) = x` with `f'` supplied.
    pub fn inverse_x(
        f: impl Fn(&Self) -> Result<Self>,
        df: impl Fn(&Self) -> Result<Self>,
        nx: usize,
        nt: usize,
    ) -> Result<Self> {
        let x = Self::x(nx, nt);
        let mut g = x.clone();
        for _ in 0..=2 * nx + 2 {
            let r = f(&g)?.sub(&x);
            if r.is_zero() {
                return Ok(g);
            }
            g = g.sub(&r.mul(&df(&g)?.recip()?));
        }
        Err(Error::Series("Newton iteration did not settle".into()))
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().flatten().all(|v| v.is_zero())
    }

    /// Coefficients `a! [x^a t^b]` keyed by `"a,b"`, as exact strings.
    pub fn to_json(&self) -> serde_json::Value {
        let mut m = BTreeMap::new();
        for a in 0..=self.nx {
            for b in 0..=self.nt {
                let v = self.egf_coeff(a, b);
                if !v.is_zero() {
                    m.insert(format!("{a},{b}"), serde_json::Value::String(v.to_string()));
                }
            }
        }
        serde_json::json!({ "nx": self.nx, "nt": self.nt, "egf": m })
    }
}

fn check_orders(k: i64, nx: usize) -> Result<()> {
    guard("series order", nx, MAX_ORDER)?;
    if k < 0 {
        return Err(Error::Series(format!("k = {k} must be non-negative")));
    }
    Ok(())
}

/// Solution of `C = exp(x (tC + 1)^k) - 1`, by fixed-point iteration from
/// `exp(x) - 1`.
pub fn chain_series(k: i64, nx: usize, nt: usize) -> Result<TruncatedSeries> {
    check_orders(k, nx)?;
    let x = TruncatedSeries::x(nx, nt);
    let t = TruncatedSeries::t(nx, nt);
    let one = TruncatedSeries::one(nx, nt);
    let mut c = x.exp()?.sub(&one);
    for _ in 0..=nx + 1 {
        let next = x.mul(&t.mul(&c).one_plus_pow(k)?).exp()?.sub(&one);
        if next == c {
            return Ok(c);
        }
        c = next;
    }
    Err(Error::Series("fixed point did not settle".into()))
}

/// The same series as the compositional inverse of `ln(1+y) (1+ty)^-k`.
pub fn chain_series_by_inverse(k: i64, nx: usize, nt: usize) -> Result<TruncatedSeries> {
    check_orders(k, nx)?;
    let t = TruncatedSeries::t(nx, nt);
    let kk = int(k);
    let f = |y: &TruncatedSeries| -> Result<TruncatedSeries> {
        Ok(y.log1p()?.mul(&t.mul(y).one_plus_pow(-k)?))
    };
    let df = |y: &TruncatedSeries| -> Result<TruncatedSeries> {
        let a = y.one_plus_pow(-1)?.mul(&t.mul(y).one_plus_pow(-k)?);
        let b = t
            .mul(&y.log1p()?)
            .mul(&t.mul(y).one_plus_pow(-k - 1)?)
            .scale(&kk);
        Ok(a.sub(&b))
    };
    TruncatedSeries::inverse_x(f, df, nx, nt)
}

/// Checks `C_k = C_{k-i} ∘ (x (tC_k + 1)^i)` for every `1 ≤ i ≤ k`.
pub fn check_intermediate_equation(k: i64, nx: usize, nt: usize) -> Result<bool> {
    let ck = chain_series(k, nx, nt)?;
    let x = TruncatedSeries::x(nx, nt);
    let t = TruncatedSeries::t(nx, nt);
    for i in 1..=k {
        let lower = chain_series(k - i, nx, nt)?;
        let inner = x.mul(&t.mul(&ck).one_plus_pow(i)?);
        if lower.compose_x(&inner)? != ck {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `n! [x^n t^l]` of the chain series as an integer.
pub fn series_chain_count(s: &TruncatedSeries, n: usize, l: usize) -> Result<i128> {
    let v = s.egf_coeff(n, l);
    if !v.is_integer() {
        return Err(Error::Series(format!("non-integral coefficient {v}")));
    }
    let z = v.to_integer();
    i128::try_from(z.abs()).map(|m| if z.is_negative() { -m } else { m }).map_err(|_| Error::Series("coefficient overflow".into()))
}
