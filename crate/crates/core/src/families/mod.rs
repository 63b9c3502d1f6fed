//! The three worked families: Frobenius extensions of degree `pd`, dihedral
//! Galois extensions of degree `2p`, and the degree-12 counterexample with
//! group `S3×S3`.

mod counterexample;
mod dihedral;
mod frobenius;

use thiserror::Error;

use crate::gp::GpError;
use crate::group::{catalog, GroupError};

pub use counterexample::{counterexample, CounterexampleContext, N_GENERATORS, OMEGAS, POLYNOMIAL, SIGMA, TAU};
pub use dihedral::{dihedral, pi, DihedralContext};
pub use frobenius::{frobenius, FrobeniusContext};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    /// A parameter violates its constraint; the message names it.
    #[error("{0}")]
    InvalidParameter(String),
    /// A stated identity failed against the constructed data.
    #[error("identity check failed: {0}")]
    Check(String),
    #[error(transparent)]
    Gp(#[from] GpError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

fn invalid(msg: impl Into<String>) -> FamilyError {
    FamilyError::InvalidParameter(msg.into())
}

fn check(cond: bool, what: impl Into<String>) -> Result<(), FamilyError> {
    if cond {
        Ok(())
    } else {
        Err(FamilyError::Check(what.into()))
    }
}

pub fn modpow(base: usize, exp: u64, m: usize) -> usize {
    let (mut b, mut e, mut r) = ((base % m) as u64, exp, 1u64 % m as u64);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m as u64;
        }
        b = b * b % m as u64;
        e >>= 1;
    }
    r as usize
}

/// Inverse modulo a prime.
pub fn modinv(a: usize, p: usize) -> usize {
    modpow(a, p as u64 - 2, p)
}

pub fn is_primitive_root(z: usize, p: usize) -> bool {
    z % p != 0 && catalog::mult_order(z % p, p) == p - 1
}

pub fn smallest_primitive_root(p: usize) -> usize {
    (2..p).find(|&z| is_primitive_root(z, p)).unwrap_or(1)
}

pub fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|k| n % k == 0).collect()
}
