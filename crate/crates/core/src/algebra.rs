//! Chebyshev polynomials of the second kind and the real-axis projection
//! sequence of the uniform angle set `{0, π/n, …, (n−1)π/n}`.

use std::f64::consts::PI;
use std::fmt;

use crate::error::{Error, Result};

/// Largest `k` for which `U_k` is computed; coefficients of higher
/// degrees leave the `i64` range.
pub const MAX_CHEBYSHEV_DEGREE: usize = 50;

/// Integer polynomial, `coeffs[i]` multiplies `x^i`. No trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntPoly {
    coeffs: Vec<i64>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> i64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, &c| acc * x + c as f64)
    }
}

impl fmt::Display for IntPoly {
    /// Highest power first, e.g. `8x^3-4x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exp, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.unsigned_abs();
            let body = match (exp, mag) {
                (0, m) => m.to_string(),
                (1, 1) => "x".to_string(),
                (1, m) => format!("{m}x"),
                (e, 1) => format!("x^{e}"),
                (e, m) => format!("{m}x^{e}"),
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        Ok(())
    }
}

/// `U_k` via `U_k = 2x·U_{k−1} − U_{k−2}`, `U_0 = 1`, `U_1 = 2x`.
pub fn chebyshev_u(k: usize) -> Result<IntPoly> {
    Ok(chebyshev_table(k)?.pop().expect("table holds k+1 entries"))
}

/// `[U_0, …, U_k]`.
pub fn chebyshev_table(k: usize) -> Result<Vec<IntPoly>> {
    if k > MAX_CHEBYSHEV_DEGREE {
        return Err(Error::OutOfRange(format!(
            "Chebyshev degree {k} exceeds {MAX_CHEBYSHEV_DEGREE}"
        )));
    }
    let overflow = || Error::OutOfRange(format!("coefficient overflow computing U_{k}"));
    let mut table = vec![IntPoly::new(vec![1])];
    if k >= 1 {
        table.push(IntPoly::new(vec![0, 2]));
    }
    for n in 2..=k {
        let prev = &table[n - 1].coeffs;
        let prev2 = &table[n - 2].coeffs;
        let mut next = vec![0i64; n + 1];
        for (i, &c) in prev.iter().enumerate() {
            next[i + 1] = c.checked_mul(2).ok_or_else(overflow)?;
        }
        for (i, &c) in prev2.iter().enumerate() {
            next[i] = next[i].checked_sub(c).ok_or_else(overflow)?;
        }
        table.push(IntPoly::new(next));
    }
    Ok(table)
}

/// Every nonzero coefficient of `U_k` sits at an exponent of the same
/// parity as `k`.
pub fn chebyshev_parity_holds(k: usize) -> Result<bool> {
    let p = chebyshev_u(k)?;
    Ok(p.coeffs()
        .iter()
        .enumerate()
        .all(|(exp, &c)| c == 0 || exp % 2 == k % 2))
}

pub fn eval_poly(p: &IntPoly, x: f64) -> f64 {
    p.eval(x)
}

/// Projection `x_k` of `[[0,1]]_{π/n, 2π/n}` onto the real axis along the
/// direction `(k+1)π/n`:
/// `x_k = 2 sin(kπ/n) cos(π/n) / sin((k+1)π/n)`.
pub fn projection_xk(n: usize, k: usize) -> Result<f64> {
    if n < 3 {
        return Err(Error::InvalidIndex(format!("n = {n} must be at least 3")));
    }
    if k > n - 2 {
        return Err(Error::InvalidIndex(format!(
            "k = {k} outside 0..={}",
            n - 2
        )));
    }
    // Closed forms for the three anchor values.
    let step = PI / n as f64;
    match k {
        0 => Ok(0.0),
        1 => Ok(1.0),
        _ if k == n - 2 => Ok(4.0 * step.cos().powi(2)),
        _ => Ok(2.0 * (k as f64 * step).sin() * step.cos() / ((k + 1) as f64 * step).sin()),
    }
}

/// Projection of `[[0,1]]_{(i+1)π/n, (j+1)π/n}` along `(k+1)π/n`, obtained
/// by rebasing: `(x_k − x_i) / (x_j − x_i)`.
pub fn projection_xk_rebased(n: usize, k: usize, i: usize, j: usize) -> Result<f64> {
    if i >= j {
        return Err(Error::InvalidIndex(format!(
            "need i < j, got i = {i}, j = {j}"
        )));
    }
    let xi = projection_xk(n, i)?;
    let xj = projection_xk(n, j)?;
    let xk = projection_xk(n, k)?;
    let span = xj - xi;
    if span == 0.0 {
        return Err(Error::DegenerateRebase);
    }
    Ok((xk - xi) / span)
}

/// Whether `2cos(π/n)` lies in the origami set of the uniform angle set
/// with `n` directions: exactly when `n` is odd.
pub fn two_cos_in_m(n: usize) -> Result<bool> {
    if n < 3 {
        return Err(Error::OutOfRange(format!("n = {n} must be at least 3")));
    }
    Ok(n % 2 == 1)
}
