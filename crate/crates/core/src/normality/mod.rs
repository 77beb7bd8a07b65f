//! Finite-scale normality diagnostics for a nonnegative sequence read as the
//! histogram of a random variable `X` with `P(X = k) = a_k / Σ a_j`.

pub mod descartes;
mod kahn;
pub mod sturm;

pub use kahn::{kahn_check, KahnCheck};

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::poly::Polynomial;
use crate::Caps;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NormalityError {
    #[error("sequence has no positive entry")]
    EmptySequence,
    #[error("distribution is a point mass (zero variance)")]
    DegenerateDistribution,
}

fn int(v: &BigUint) -> BigInt {
    BigInt::from_biguint(Sign::Plus, v.clone())
}

/// `p/q` with `q = 1` printed as `p/1`.
pub fn ratio_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Exact moments of the induced distribution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HistogramStats {
    pub total: BigUint,
    pub mean: BigRational,
    pub variance: BigRational,
}

pub fn histogram_stats(values: &[BigUint]) -> Result<HistogramStats, NormalityError> {
    let total: BigUint = values.iter().sum();
    if total.is_zero() {
        return Err(NormalityError::EmptySequence);
    }
    let (mut s1, mut s2) = (BigUint::zero(), BigUint::zero());
    for (k, v) in values.iter().enumerate() {
        let kv = v * BigUint::from(k);
        s2 += &kv * BigUint::from(k);
        s1 += kv;
    }
    let t = int(&total);
    let mean = BigRational::new(int(&s1), t.clone());
    let variance = BigRational::new(int(&s2), t) - &mean * &mean;
    Ok(HistogramStats { total, mean, variance })
}

/// `Φ(x) = erfc(-x / √2) / 2`; libm's `erfc` is accurate to about one ulp,
/// far inside the 1e-12 this module needs on `|x| <= 8`.
pub fn std_normal_cdf(x: f64) -> f64 {
    0.5 * libm::erfc(-x / std::f64::consts::SQRT_2)
}

/// `sup_x |F(x) - Φ(x)|` where `F` is the CDF of `(X - μ)/σ`.
///
/// The supremum of a step function against a continuous increasing one is
/// attained at a jump, approached from the left or the right, so only the
/// jump points are examined. Cumulative masses and `k - μ` are exact
/// rationals, each rounded once to `f64`.
pub fn kolmogorov_distance(values: &[BigUint]) -> Result<f64, NormalityError> {
    let stats = histogram_stats(values)?;
    if stats.variance.is_zero() {
        return Err(NormalityError::DegenerateDistribution);
    }
    let sigma = stats.variance.to_f64().expect("finite variance").sqrt();
    let total = int(&stats.total);
    let mut below = BigUint::zero();
    let mut sup = 0.0f64;
    for (k, v) in values.iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        let left = BigRational::new(int(&below), total.clone()).to_f64().unwrap();
        below += v;
        let right = BigRational::new(int(&below), total.clone()).to_f64().unwrap();
        let z = (BigRational::from_integer(BigInt::from(k)) - &stats.mean).to_f64().unwrap() / sigma;
        let phi = std_normal_cdf(z);
        sup = sup.max((left - phi).abs()).max((right - phi).abs());
    }
    Ok(sup.clamp(0.0, 1.0))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootVerdict {
    Verified,
    Refuted,
    Skipped,
}

impl RootVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            RootVerdict::Verified => "verified",
            RootVerdict::Refuted => "refuted",
            RootVerdict::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootCheck {
    pub verdict: RootVerdict,
    /// Distinct real roots of `Σ a_k x^k`, including `0`; `None` when skipped.
    pub distinct_real_roots: Option<usize>,
}

pub fn generating_polynomial(values: &[BigUint]) -> Polynomial {
    Polynomial::new(values.iter().map(int).collect())
}

/// Decides exactly whether `Σ a_k x^k` has only real roots.
///
/// The root `0` is divided out. With nonnegative coefficients every real
/// root is negative, so the roots of `p(-x)` are counted on `(0, ∞)` by
/// Descartes bisection; `deg` roots there (with multiplicity) certify
/// real-rootedness and fewer refute it. When bisection cannot finish (a
/// repeated root off the dyadic grid), the squarefree part is counted with
/// a Sturm chain instead.
pub fn real_rooted(values: &[BigUint], caps: &Caps) -> Result<RootCheck, NormalityError> {
    let p = generating_polynomial(values);
    if p.is_zero() {
        return Err(NormalityError::EmptySequence);
    }
    let zero_mult = p.zero_multiplicity();
    let rest = p.drop_low(zero_mult);
    let degree = rest.degree().unwrap();
    if degree > caps.sturm_degree {
        return Ok(RootCheck { verdict: RootVerdict::Skipped, distinct_real_roots: None });
    }
    let zero = usize::from(zero_mult > 0);
    if degree == 0 {
        return Ok(RootCheck { verdict: RootVerdict::Verified, distinct_real_roots: Some(zero) });
    }
    let reflected = Polynomial::new(
        rest.coeffs().iter().enumerate().map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() }).collect(),
    );
    if let Some(found) = descartes::count_positive_roots(&reflected, 64 * degree + 64) {
        let verdict = if found.total == degree { RootVerdict::Verified } else { RootVerdict::Refuted };
        return Ok(RootCheck { verdict, distinct_real_roots: Some(found.distinct + zero) });
    }
    let sf = sturm::squarefree_part(&rest);
    let count = sturm::count_roots_between(&sf, sturm::Point::NegInf, sturm::Point::At(0));
    let verdict = if count == sf.degree().unwrap() { RootVerdict::Verified } else { RootVerdict::Refuted };
    Ok(RootCheck { verdict, distinct_real_roots: Some(count + zero) })
}

/// Newton's inequalities on the support `a_lo..=a_hi`, reindexed to `0..=m`:
/// `a_k^2 >= a_{k-1} a_{k+1} (1 + 1/k)(1 + 1/(m-k))` for `0 < k < m`.
/// An internal zero fails outright. Compared by cross-multiplying integers.
pub fn newton_inequalities(values: &[BigUint]) -> bool {
    let Some(lo) = values.iter().position(|v| !v.is_zero()) else {
        return false;
    };
    let hi = values.iter().rposition(|v| !v.is_zero()).unwrap();
    let a = &values[lo..=hi];
    if a.iter().any(Zero::is_zero) {
        return false;
    }
    let m = a.len() - 1;
    (1..m).all(|k| {
        let lhs = &a[k] * &a[k] * BigUint::from(k) * BigUint::from(m - k);
        let rhs = &a[k - 1] * &a[k + 1] * BigUint::from(k + 1) * BigUint::from(m - k + 1);
        lhs >= rhs
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct NormalityReport {
    pub stats: HistogramStats,
    /// `None` when the distribution is degenerate.
    pub kolmogorov: Option<f64>,
    pub roots: RootCheck,
    pub newton_ok: bool,
}

impl NormalityReport {
    pub fn is_degenerate(&self) -> bool {
        self.kolmogorov.is_none()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "total": self.stats.total.to_string(),
            "mean": ratio_string(&self.stats.mean),
            "variance": ratio_string(&self.stats.variance),
            "kolmogorov": self.kolmogorov,
            "degenerate": self.is_degenerate(),
            "real_rooted": self.roots.verdict.as_str(),
            "distinct_real_roots": self.roots.distinct_real_roots,
            "newton_ok": self.newton_ok,
        })
    }
}

pub fn normality_report(values: &[BigUint], caps: &Caps) -> Result<NormalityReport, NormalityError> {
    let stats = histogram_stats(values)?;
    let kolmogorov = match kolmogorov_distance(values) {
        Ok(d) => Some(d),
        Err(NormalityError::DegenerateDistribution) => None,
        Err(e) => return Err(e),
    };
    Ok(NormalityReport {
        stats,
        kolmogorov,
        roots: real_rooted(values, caps)?,
        newton_ok: newton_inequalities(values),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn u(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn stats_examples() {
        let s = histogram_stats(&u(&[0, 1, 1])).unwrap();
        assert_eq!((s.mean, s.variance), (q(3, 2), q(1, 4)));
        let s = histogram_stats(&u(&[0, 0, 0, 7])).unwrap();
        assert_eq!((s.mean, s.variance), (q(3, 1), q(0, 1)));
        let s = histogram_stats(&u(&[0, 1, 3, 1])).unwrap();
        assert_eq!((s.mean, s.variance), (q(2, 1), q(2, 5)));
        assert_eq!(histogram_stats(&u(&[0, 0])), Err(NormalityError::EmptySequence));
    }

    #[test]
    fn normal_cdf_values() {
        assert!((std_normal_cdf(0.0) - 0.5).abs() < 1e-15);
        assert!((std_normal_cdf(-1.0) - 0.158_655_253_931_457_05).abs() < 1e-15);
        assert!((std_normal_cdf(1.96) - 0.975_002_104_851_780).abs() < 1e-14);
        assert!(std_normal_cdf(-8.0) > 0.0 && std_normal_cdf(-8.0) < 1e-14);
    }

    #[test]
    fn two_point_distance() {
        // Masses 1/2 at ±1: the worst gap is 1/2 - Φ(-1).
        let d = kolmogorov_distance(&u(&[0, 1, 1])).unwrap();
        assert!((d - (0.5 - 0.158_655_253_931_457)).abs() < 1e-12, "{d}");
        assert_eq!(kolmogorov_distance(&u(&[0, 5])), Err(NormalityError::DegenerateDistribution));
    }

    #[test]
    fn root_examples() {
        let caps = Caps::default();
        assert_eq!(real_rooted(&u(&[1, 4, 2]), &caps).unwrap().verdict, RootVerdict::Verified);
        let r = real_rooted(&u(&[0, 1, 3, 1]), &caps).unwrap();
        assert_eq!((r.verdict, r.distinct_real_roots), (RootVerdict::Verified, Some(3)));
        let r = real_rooted(&u(&[1, 1, 1]), &caps).unwrap();
        assert_eq!((r.verdict, r.distinct_real_roots), (RootVerdict::Refuted, Some(0)));
        // (x+1)^2 x^3: repeated roots are fine.
        let r = real_rooted(&u(&[0, 0, 0, 1, 2, 1]), &caps).unwrap();
        assert_eq!((r.verdict, r.distinct_real_roots), (RootVerdict::Verified, Some(2)));
        let big: Vec<u64> = vec![1; 80];
        let r = real_rooted(&u(&big), &Caps::small()).unwrap();
        assert_eq!(r.verdict, RootVerdict::Skipped);
    }

    #[test]
    fn newton_examples() {
        assert!(newton_inequalities(&u(&[0, 1, 3, 1])));
        assert!(!newton_inequalities(&u(&[1, 1, 1])));
        assert!(newton_inequalities(&u(&[1, 4, 2])));
        assert!(!newton_inequalities(&u(&[1, 0, 1])));
        assert!(newton_inequalities(&u(&[0, 0, 9])));
    }

    #[test]
    fn report() {
        let r = normality_report(&u(&[0, 0, 0, 2, 3, 1]), &Caps::default()).unwrap();
        assert_eq!(r.roots.verdict, RootVerdict::Verified);
        assert!(r.newton_ok);
        assert!(!r.is_degenerate());
        let j = r.to_json();
        assert_eq!(j["mean"], "23/6");
        assert_eq!(j["real_rooted"], "verified");
        let r = normality_report(&u(&[0, 0, 4]), &Caps::default()).unwrap();
        assert!(r.is_degenerate());
        assert_eq!(r.to_json()["kolmogorov"], Value::Null);
    }
}
