//! Closed-form evaluation of the extremal bounds, kept strictly separate
//! from brute-force computation so the two can be cross-checked.
//!
//! All evaluation is exact integer arithmetic: the fractional coefficients
//! are cleared to a common denominator and an integrality assertion runs at
//! the end, so floor comparisons carry no rounding ambiguity.

use serde::Serialize;

use crate::error::ParamError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Applicability {
    Applies,
    OutOfDomain,
}

/// Which structural regime of the extremal family a closed form covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FormulaBranch {
    /// Even diameter, comet regime (`n - d >= d/2`).
    EvenComet,
    /// Even diameter, hanging-path regime (`n - d < d/2`).
    EvenPath,
    /// Odd diameter, comet regime (`n - d >= floor(d/2)`).
    OddComet,
    /// Odd diameter, hanging-path regime: no closed form, callers fall back
    /// to brute force.
    OddPath,
    /// Diameter 2 or 3: the comet degenerates and the closed forms do not
    /// apply (the extremal trees are the star and a dumbbell).
    SmallDiameter,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FormulaResult {
    pub value: Option<i64>,
    pub applicability: Applicability,
    pub branch: FormulaBranch,
}

impl FormulaResult {
    fn applies(value: i64, branch: FormulaBranch) -> Self {
        FormulaResult {
            value: Some(value),
            applicability: Applicability::Applies,
            branch,
        }
    }

    fn out_of_domain(branch: FormulaBranch) -> Self {
        FormulaResult {
            value: None,
            applicability: Applicability::OutOfDomain,
            branch,
        }
    }
}

fn exact_div(numerator: i64, denominator: i64) -> i64 {
    assert!(
        numerator % denominator == 0,
        "non-integer closed-form value {numerator}/{denominator}"
    );
    numerator / denominator
}

/// Normality sum of the diameter-constrained maximizer, by closed form.
///
/// Requires `2 <= d <= n-1`. Out-of-domain points (diameter 2 or 3, and the
/// odd hanging-path regime) report which branch was hit so callers can fall
/// back to brute force.
pub fn eval_norm_t_hat(n: usize, d: usize) -> Result<FormulaResult, ParamError> {
    if d < 2 || d + 1 > n {
        return Err(ParamError::new(
            "eval_norm_t_hat",
            format!("requires 2 <= d <= n-1, got n={n} d={d}"),
        ));
    }
    let (ni, di) = (n as i64, d as i64);
    if d < 4 {
        return Ok(FormulaResult::out_of_domain(FormulaBranch::SmallDiameter));
    }
    let comet_regime = n - d >= d / 2;
    let result = if d.is_multiple_of(2) {
        if comet_regime {
            let v = exact_div(-7 * di * di + (8 * ni + 6) * di - 8 * ni, 8);
            FormulaResult::applies(v, FormulaBranch::EvenComet)
        } else {
            let v = exact_div(2 * di * di - 4 * ni * di + 4 * ni * ni - 4 * ni, 8);
            FormulaResult::applies(v, FormulaBranch::EvenPath)
        }
    } else if comet_regime {
        let v = exact_div(-7 * di * di + (8 * ni + 16) * di - 16 * ni - 1, 8);
        FormulaResult::applies(v, FormulaBranch::OddComet)
    } else {
        FormulaResult::out_of_domain(FormulaBranch::OddPath)
    };
    Ok(result)
}

/// Global upper bound on the normality sum of a tree: `floor((2n^2-4n+1)/7)`.
pub fn max_norm_bound(n: usize) -> Result<i64, ParamError> {
    if n < 3 {
        return Err(ParamError::new("max_norm_bound", format!("requires n >= 3, got n={n}")));
    }
    let ni = n as i64;
    Ok((2 * ni * ni - 4 * ni + 1).div_euclid(7))
}

/// The diameters claimed to attain [`max_norm_bound`], one per residue of
/// `n` mod 7 (two for residue 1), in increasing order.
pub fn optimal_diameters(n: usize) -> Result<Vec<usize>, ParamError> {
    if n < 3 {
        return Err(ParamError::new(
            "optimal_diameters",
            format!("requires n >= 3, got n={n}"),
        ));
    }
    let ni = n as i64;
    let ds: Vec<i64> = match n % 7 {
        0 => vec![4 * ni / 7],
        1 => vec![(4 * ni - 4) / 7, (4 * ni + 10) / 7],
        2 => vec![(4 * ni + 6) / 7],
        3 => vec![(4 * ni + 2) / 7],
        4 => vec![(4 * ni - 2) / 7],
        5 => vec![(4 * ni + 8) / 7],
        _ => vec![(4 * ni + 4) / 7],
    };
    Ok(ds.into_iter().map(|d| d as usize).collect())
}

/// Candidate diameters for the maximizer with `k` peripheral vertices:
/// `floor((4(n-k)+10)/7) ..= ceil((4(n-k)+11)/7)`, inclusive on both ends.
pub fn t_tilde_optimal_d_range(n: usize, k: usize) -> Result<(usize, usize), ParamError> {
    if k < 2 || n < k + 2 {
        return Err(ParamError::new(
            "t_tilde_optimal_d_range",
            format!("requires k >= 2 and n >= k+2, got n={n} k={k}"),
        ));
    }
    let m = 4 * (n - k) as i64;
    let lo = (m + 10).div_euclid(7);
    let hi = -(-(m + 11)).div_euclid(7); // ceiling
    Ok((lo as usize, hi as usize))
}

/// Minimum normality sum among trees with exactly `k` peripheral vertices:
/// `3n - 6k` (the closed sum of the multiset {0^k, 1^k, 2^k, 3^(n-3k)}).
pub fn min_norm_k_peripheral(n: usize, k: usize) -> Result<i64, ParamError> {
    if k < 2 || n < 3 * k + 1 {
        return Err(ParamError::new(
            "min_norm_k_peripheral",
            format!("requires k >= 2 and n >= 3k+1, got n={n} k={k}"),
        ));
    }
    Ok(3 * n as i64 - 6 * k as i64)
}

/// Maximum lambda-span sum among trees with diameter `d`:
/// `(2n-d)d/2` for even `d`, `((2n-d)d+1)/2` for odd.
pub fn max_lambda_given_d(n: usize, d: usize) -> Result<i64, ParamError> {
    if d < 2 || d + 1 > n {
        return Err(ParamError::new(
            "max_lambda_given_d",
            format!("requires 2 <= d <= n-1, got n={n} d={d}"),
        ));
    }
    let (ni, di) = (n as i64, d as i64);
    let v = if d.is_multiple_of(2) {
        exact_div((2 * ni - di) * di, 2)
    } else {
        exact_div((2 * ni - di) * di + 1, 2)
    };
    Ok(v)
}

/// The stated global bound `floor((n^2+1)/2)` on the lambda-span sum.
///
/// Exhaustive search (see the verification engine) matches this only for
/// even `n`; the verifier reports both sides.
pub fn max_lambda_bound(n: usize) -> Result<i64, ParamError> {
    if n < 8 {
        return Err(ParamError::new("max_lambda_bound", format!("requires n >= 8, got n={n}")));
    }
    let ni = n as i64;
    Ok((ni * ni + 1).div_euclid(2))
}

/// The global lower bound on the lambda-span sum for `n >= 8`.
pub fn min_lambda_bound(n: usize) -> Result<i64, ParamError> {
    if n < 8 {
        return Err(ParamError::new("min_lambda_bound", format!("requires n >= 8, got n={n}")));
    }
    Ok(12)
}
