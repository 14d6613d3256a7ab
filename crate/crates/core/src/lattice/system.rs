use serde::Serialize;

use super::{checked_lcm, gcd_all, ExponentVector};
use crate::error::{Error, Result};

/// The data attached to a vector `lambda` of positive integers:
/// `L = lcm(lambda)`, `omega_i = L / lambda_i`, `ell = lcm(lambda_1..lambda_{n-1})`
/// and the shifted vector `lambda' = (lambda_1, .., lambda_{n-1}, lambda_n + ell)`.
///
/// For `n = 1` the empty lcm is taken to be 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LambdaSystem {
    lambda: Vec<u64>,
    #[serde(rename = "L")]
    lcm: u64,
    omega: Vec<u64>,
    ell: u64,
    lambda_prime: Vec<u64>,
}

impl LambdaSystem {
    pub fn new(lambda: &[u64]) -> Result<Self> {
        if lambda.is_empty() {
            return Err(Error::invalid("lambda must have at least one entry"));
        }
        if let Some(pos) = lambda.iter().position(|&l| l == 0) {
            return Err(Error::invalid(format!(
                "lambda entries must be positive (entry {} is 0)",
                pos + 1
            )));
        }
        let n = lambda.len();
        let lcm = checked_lcm(lambda)?;
        let omega = lambda.iter().map(|&l| lcm / l).collect();
        let ell = checked_lcm(&lambda[..n - 1])?;
        let mut lambda_prime = lambda.to_vec();
        lambda_prime[n - 1] = lambda[n - 1]
            .checked_add(ell)
            .ok_or(Error::Overflow("lambda'"))?;
        Ok(LambdaSystem {
            lambda: lambda.to_vec(),
            lcm,
            omega,
            ell,
            lambda_prime,
        })
    }

    pub fn n(&self) -> usize {
        self.lambda.len()
    }

    pub fn lambda(&self) -> &[u64] {
        &self.lambda
    }

    /// `L = lcm(lambda_1, .., lambda_n)`.
    pub fn lcm(&self) -> u64 {
        self.lcm
    }

    pub fn omega(&self) -> &[u64] {
        &self.omega
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    pub fn lambda_prime(&self) -> &[u64] {
        &self.lambda_prime
    }

    /// The system for `lambda'`.
    pub fn prime(&self) -> Result<LambdaSystem> {
        LambdaSystem::new(&self.lambda_prime)
    }

    pub fn gcd(&self) -> u64 {
        gcd_all(&self.lambda)
    }

    /// `omega . a`, the scaled value of `a_1/lambda_1 + .. + a_n/lambda_n`.
    pub fn weight(&self, a: &[u64]) -> u128 {
        super::dot(&self.omega, a)
    }

    /// `lambda_i e_i`.
    pub fn vertex(&self, i: usize) -> ExponentVector {
        ExponentVector::axis(self.n(), i, self.lambda[i])
    }

    /// Largest-index convention check used by the final remark: `lambda_n >= lambda_i` for all i.
    pub fn last_is_largest(&self) -> bool {
        let last = self.lambda[self.n() - 1];
        self.lambda.iter().all(|&l| l <= last)
    }

    pub fn pairwise_coprime(&self) -> bool {
        use num_integer::Integer;
        let l = &self.lambda;
        (0..l.len()).all(|i| (i + 1..l.len()).all(|j| l[i].gcd(&l[j]) == 1))
    }
}
