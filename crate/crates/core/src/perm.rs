//! Permutations of `{0, .., n-1}`.
//!
//! Composition follows the function convention: `(p * q)(x) = p(q(x))`, the
//! right factor acts first. Points are stored 0-based and displayed 1-based in
//! cycle notation, e.g. `(1,9)(2,10)`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Mul;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("image sequence is not a bijection of 0..{0}")]
    NotBijective(usize),
    #[error("malformed cycle notation at byte {pos}: {msg}")]
    Malformed { pos: usize, msg: &'static str },
    #[error("point {0} repeated in cycle notation")]
    RepeatedPoint(usize),
    #[error("point {point} out of range 1..={degree}")]
    OutOfRange { point: usize, degree: usize },
}

/// A bijection of `{0, .., n-1}` stored as its image sequence.
///
/// The derived ordering compares image sequences lexicographically; this is
/// the canonical element order used everywhere in the crate. The identity is
/// the smallest permutation of any degree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        assert!(n >= 1, "degree must be at least 1");
        Perm {
            images: (0..n as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Perm, PermError> {
        let n = images.len();
        if n == 0 {
            return Err(PermError::ZeroDegree);
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(PermError::NotBijective(n));
            }
            seen[x] = true;
        }
        Ok(Perm {
            images: images.into_iter().map(|x| x as u32).collect(),
        })
    }

    /// Builds `x -> f(x)`. Panics if `f` is not a bijection; meant for
    /// formula-defined permutations whose bijectivity is structural.
    pub fn from_fn(n: usize, f: impl Fn(usize) -> usize) -> Perm {
        Perm::from_images((0..n).map(f).collect()).expect("from_fn: map is not a bijection")
    }

    /// Builds a permutation from 0-based cycles. Points not mentioned are fixed.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Perm, PermError> {
        if n == 0 {
            return Err(PermError::ZeroDegree);
        }
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x >= n {
                    return Err(PermError::OutOfRange {
                        point: x + 1,
                        degree: n,
                    });
                }
                if used[x] {
                    return Err(PermError::RepeatedPoint(x + 1));
                }
                used[x] = true;
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Perm::from_images(images)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&x| x as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self ∘ other`, i.e. `x -> self(other(x))`.
    pub fn compose(&self, other: &Perm) -> Result<Perm, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.compose_unchecked(other))
    }

    fn compose_unchecked(&self, other: &Perm) -> Perm {
        Perm {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Perm { images }
    }

    /// `g ∘ self ∘ g⁻¹`.
    pub fn conjugate_by(&self, g: &Perm) -> Result<Perm, PermError> {
        if self.degree() != g.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), g.degree()));
        }
        // (g p g^-1)(g(x)) = g(p(x))
        let mut images = vec![0u32; self.degree()];
        for x in 0..self.degree() {
            images[g.apply(x)] = g.images[self.apply(x)];
        }
        Ok(Perm { images })
    }

    pub fn pow(&self, k: i64) -> Perm {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Perm::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose_unchecked(&sq);
            }
            sq = sq.compose_unchecked(&sq);
            e >>= 1;
        }
        acc
    }

    /// Disjoint cycles, including fixed points as 1-cycles. Each cycle starts
    /// at its least point and cycles are ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths, ascending, fixed points counted as 1s.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable();
        t
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    pub fn is_even(&self) -> bool {
        (self.degree() - self.cycles().len()) % 2 == 0
    }

    pub fn is_fixed_point_free(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| i as u32 != x)
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&x| self.apply(x) == x).collect()
    }

    /// Canonical 1-based cycle notation; `()` for the identity.
    pub fn to_cycle_string(&self) -> String {
        let mut s = String::new();
        for c in self.cycles().into_iter().filter(|c| c.len() > 1) {
            s.push('(');
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    s.push(',');
                }
                s.push_str(&(x + 1).to_string());
            }
            s.push(')');
        }
        if s.is_empty() {
            s.push_str("()");
        }
        s
    }
}

impl Mul<&Perm> for &Perm {
    type Output = Perm;

    /// Panics on degree mismatch; use [`Perm::compose`] for a checked product.
    fn mul(self, rhs: &Perm) -> Perm {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch in product");
        self.compose_unchecked(rhs)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}]{}", self.degree(), self.to_cycle_string())
    }
}

/// Parses 1-based cycle notation (`()` or a product of cycles such as
/// `(1,9)(2,10)`) into a permutation of degree `n`. Whitespace is ignored.
pub fn parse_perm(text: &str, n: usize) -> Result<Perm, PermError> {
    if n == 0 {
        return Err(PermError::ZeroDegree);
    }
    let bytes: Vec<(usize, u8)> = text
        .bytes()
        .enumerate()
        .filter(|(_, b)| !b.is_ascii_whitespace())
        .collect();
    let end = text.len();
    let at = |i: usize| bytes.get(i).map_or(end, |&(p, _)| p);
    if bytes.is_empty() {
        return Err(PermError::Malformed {
            pos: 0,
            msg: "empty input",
        });
    }
    if bytes.len() == 2 && bytes[0].1 == b'(' && bytes[1].1 == b')' {
        return Ok(Perm::identity(n));
    }

    let mut images: Vec<usize> = (0..n).collect();
    let mut used = vec![false; n];
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i].1 != b'(' {
            return Err(PermError::Malformed {
                pos: at(i),
                msg: "expected '('",
            });
        }
        i += 1;
        let mut cycle = Vec::new();
        loop {
            let start = i;
            let mut value: usize = 0;
            while i < bytes.len() && bytes[i].1.is_ascii_digit() {
                value = value
                    .checked_mul(10)
                    .and_then(|v| v.checked_add((bytes[i].1 - b'0') as usize))
                    .ok_or(PermError::Malformed {
                        pos: at(i),
                        msg: "integer overflow",
                    })?;
                i += 1;
            }
            if i == start {
                return Err(PermError::Malformed {
                    pos: at(i),
                    msg: "expected integer",
                });
            }
            if value == 0 || value > n {
                return Err(PermError::OutOfRange {
                    point: value,
                    degree: n,
                });
            }
            let x = value - 1;
            if used[x] {
                return Err(PermError::RepeatedPoint(value));
            }
            used[x] = true;
            cycle.push(x);
            match bytes.get(i).map(|&(_, b)| b) {
                Some(b',') => i += 1,
                Some(b')') => {
                    i += 1;
                    break;
                }
                _ => {
                    return Err(PermError::Malformed {
                        pos: at(i),
                        msg: "expected ',' or ')'",
                    })
                }
            }
        }
        if cycle.len() < 2 {
            return Err(PermError::Malformed {
                pos: at(i.saturating_sub(1)),
                msg: "a cycle needs at least two points",
            });
        }
        for (k, &x) in cycle.iter().enumerate() {
            images[x] = cycle[(k + 1) % cycle.len()];
        }
    }
    Perm::from_images(images)
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Orders permutations of possibly different degrees: degree first, then images.
pub fn canonical_cmp(a: &Perm, b: &Perm) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| a.cmp(b))
}
