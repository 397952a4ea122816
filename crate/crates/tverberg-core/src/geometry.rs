//! Point configurations in affine d-space, embedded in R^(d+1) as vectors
//! with coordinate sum 1, plus the generators used by the verification
//! harness and the affine-independence screen.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use rand_chacha::ChaCha12Rng;
use rand_core::{RngCore, SeedableRng};

use crate::exactnum::{det_rational, rat, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeometryError {
    InvalidParameter(String),
    BadConfig(String),
}

impl fmt::Display for GeometryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeometryError::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            GeometryError::BadConfig(msg) => write!(f, "bad configuration: {msg}"),
        }
    }
}

impl core::error::Error for GeometryError {}

/// Problem size: q parts in affine dimension d, with the derived quantities
/// N = (q-1)(d+1), the partition-count bound ((q-1)!)^d, and the signed zero
/// count ((q-1)!)^(d+1).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Parameters {
    q: usize,
    d: usize,
    n: usize,
    bound: BigUint,
    euler: BigUint,
}

impl Parameters {
    pub fn new(q: usize, d: usize) -> Result<Self, GeometryError> {
        if q < 2 {
            return Err(GeometryError::InvalidParameter(format!("q must be >= 2, got {q}")));
        }
        if d < 1 {
            return Err(GeometryError::InvalidParameter(format!("d must be >= 1, got {d}")));
        }
        let n = (q - 1) * (d + 1);
        let fact = factorial(q - 1);
        let bound = num_traits::pow(fact.clone(), d);
        let euler = bound.clone() * fact;
        Ok(Parameters { q, d, n, bound, euler })
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// N = (q-1)(d+1); configurations carry N+1 points.
    pub fn n_big(&self) -> usize {
        self.n
    }

    pub fn num_points(&self) -> usize {
        self.n + 1
    }

    /// ((q-1)!)^d, the exact signed count and the lower bound.
    pub fn bound(&self) -> &BigUint {
        &self.bound
    }

    /// ((q-1)!)^(d+1), the Euler number of the split bundle.
    pub fn euler(&self) -> &BigUint {
        &self.euler
    }
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// A configuration of N+1 points, each a (d+1)-vector of rationals with
/// coordinate sum exactly 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PointConfig {
    params: Parameters,
    points: Vec<Vec<Rational>>,
    label: String,
    seed: Option<u64>,
}

impl PointConfig {
    pub fn new(
        params: Parameters,
        points: Vec<Vec<Rational>>,
        label: String,
        seed: Option<u64>,
    ) -> Result<Self, GeometryError> {
        if points.len() != params.num_points() {
            return Err(GeometryError::BadConfig(format!(
                "expected {} points, got {}",
                params.num_points(),
                points.len()
            )));
        }
        let width = params.d() + 1;
        for (i, point) in points.iter().enumerate() {
            if point.len() != width {
                return Err(GeometryError::BadConfig(format!(
                    "point {} has {} coordinates, expected {width}",
                    i + 1,
                    point.len()
                )));
            }
            let sum: Rational = point.iter().sum();
            if !sum.is_one() {
                return Err(GeometryError::BadConfig(format!(
                    "point {} has coordinate sum {}, expected 1",
                    i + 1,
                    sum
                )));
            }
        }
        Ok(PointConfig { params, points, label, seed })
    }

    pub fn params(&self) -> &Parameters {
        &self.params
    }

    pub fn points(&self) -> &[Vec<Rational>] {
        &self.points
    }

    /// Coordinate s_{k, alpha} with 1-based k and alpha.
    pub fn coordinate(&self, k: usize, alpha: usize) -> &Rational {
        &self.points[alpha - 1][k - 1]
    }

    pub fn point(&self, alpha: usize) -> &[Rational] {
        &self.points[alpha - 1]
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn seed(&self) -> Option<u64> {
        self.seed
    }
}

/// Outcome of the affine-independence screen. `generic` is false exactly
/// when `failures` is nonempty; later stages may append further witnessed
/// failures (vanishing sign determinants) through [`GenericityVerdict::add_failure`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenericityVerdict {
    pub generic: bool,
    pub failures: Vec<String>,
}

impl GenericityVerdict {
    pub fn add_failure(&mut self, message: String) {
        self.generic = false;
        self.failures.push(message);
    }
}

/// Uniform random configuration: the first d coordinates of every point are
/// fractions with the given denominator and numerator in
/// [-resolution, 2*resolution]; the last coordinate closes the sum to 1.
/// Deterministic in (params, seed, resolution).
pub fn random_config(
    params: &Parameters,
    seed: u64,
    resolution: u64,
) -> Result<PointConfig, GeometryError> {
    if resolution < 1 << 10 {
        return Err(GeometryError::InvalidParameter(format!(
            "resolution must be at least 2^10, got {resolution}"
        )));
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let span = 3 * u128::from(resolution) + 1;
    let denom = BigInt::from(resolution);
    let points = (0..params.num_points())
        .map(|_| {
            let mut point: Vec<Rational> = (0..params.d())
                .map(|_| {
                    let draw = u128::from(rng.next_u64()) % span;
                    let numer = draw as i128 - i128::from(resolution);
                    Rational::new(BigInt::from(numer), denom.clone())
                })
                .collect();
            let sum: Rational = point.iter().sum();
            point.push(rat(1) - sum);
            point
        })
        .collect();
    let label = format!(
        "random(q={},d={},seed={seed},resolution={resolution})",
        params.q(),
        params.d()
    );
    PointConfig::new(params.clone(), points, label, Some(seed))
}

/// The extremal configuration: q-1 coincident points at each standard basis
/// vector of R^(d+1) and the barycenter as the last point. With eps > 0 the
/// coincident copies are displaced inside the sum-zero hyperplane by distinct
/// offsets of max-norm at most eps, derived deterministically from the copy
/// index (no RNG).
pub fn sierksma_config(params: &Parameters, eps: &Rational) -> Result<PointConfig, GeometryError> {
    sierksma_config_variant(params, eps, 0)
}

/// Same as [`sierksma_config`] but with a variant index mixed into the offset
/// directions, giving reproducible families of distinct perturbations.
pub fn sierksma_config_variant(
    params: &Parameters,
    eps: &Rational,
    variant: u64,
) -> Result<PointConfig, GeometryError> {
    if eps.is_negative() {
        return Err(GeometryError::InvalidParameter(format!("eps must be >= 0, got {eps}")));
    }
    let q = params.q();
    let d = params.d();
    let width = d + 1;
    let mut points = Vec::with_capacity(params.num_points());
    for cluster in 1..=width {
        for copy in 0..q - 1 {
            let mut point: Vec<Rational> = (0..width)
                .map(|k| if k + 1 == cluster { rat(1) } else { rat(0) })
                .collect();
            if !eps.is_zero() {
                for (k, offset) in perturbation_offset(eps, q, d, cluster, copy, variant)
                    .into_iter()
                    .enumerate()
                {
                    point[k] += offset;
                }
            }
            points.push(point);
        }
    }
    points.push(vec![Rational::new(BigInt::one(), BigInt::from(width)); width]);
    let label = if eps.is_zero() {
        format!("sierksma(q={q},d={d})")
    } else {
        format!("sierksma(q={q},d={d},eps={eps},variant={variant})")
    };
    PointConfig::new(params.clone(), points, label, None)
}

/// Sum-zero offset with max-norm eps / (q * 2^copy): distinct copies in a
/// cluster get distinct max-norms, so the displaced points never collide.
fn perturbation_offset(
    eps: &Rational,
    q: usize,
    d: usize,
    cluster: usize,
    copy: usize,
    variant: u64,
) -> Vec<Rational> {
    let mix = |k: usize| -> i64 {
        let h = cluster
            .wrapping_mul(5)
            .wrapping_add(copy.wrapping_mul(3))
            .wrapping_add((variant as usize).wrapping_mul(7))
            .wrapping_add(k.wrapping_mul(11));
        (h % 13) as i64
    };
    let mut direction: Vec<i64> = (1..=d).map(mix).collect();
    let tail: i64 = -direction.iter().sum::<i64>();
    direction.push(tail);
    if direction.iter().all(|&u| u == 0) {
        direction[0] = 1;
        direction[d] = -1;
    }
    let max_abs = direction.iter().map(|u| u.abs()).max().unwrap();
    let scale = eps
        / (Rational::from_integer(BigInt::from(q as i64) * BigInt::from(max_abs))
            * Rational::from_integer(BigInt::one() << copy));
    direction
        .into_iter()
        .map(|u| &scale * rat(u))
        .collect()
}

/// Checks that every d+1 of the points span: the embedded coordinate
/// vectors of a (d+1)-subset form a nonsingular matrix. A vanishing
/// determinant is exactly an affine dependence, because the sum-1 relation
/// makes every linear dependence among the embedded vectors affine.
pub fn screen_genericity(config: &PointConfig) -> GenericityVerdict {
    let d = config.params().d();
    let total = config.params().num_points();
    let mut failures = Vec::new();
    let mut subset: Vec<usize> = (1..=d + 1).collect();
    loop {
        let matrix: Vec<Vec<Rational>> = (1..=d + 1)
            .map(|k| subset.iter().map(|&alpha| config.coordinate(k, alpha).clone()).collect())
            .collect();
        let det = det_rational(&matrix).expect("square by construction");
        if det.is_zero() {
            failures.push(format!("points {subset:?} affinely dependent"));
        }
        // next (d+1)-combination of {1, ..., total}
        let k = subset.len();
        let mut i = k;
        loop {
            if i == 0 {
                return GenericityVerdict { generic: failures.is_empty(), failures };
            }
            i -= 1;
            if subset[i] < total - (k - 1 - i) {
                subset[i] += 1;
                for j in i + 1..k {
                    subset[j] = subset[j - 1] + 1;
                }
                break;
            }
        }
    }
}
