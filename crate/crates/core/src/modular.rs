//! Kernels by word-sized modular elimination.
//!
//! Over a prime field the residues are eliminated directly. Over Q,
//! reduced echelon forms mod several primes are combined by Chinese remaindering and lifted
//! by rational reconstruction; every lifted kernel vector is checked exactly.
//! Rank over Q is at least rank mod p, so a full set of verified lifts is the
//! exact kernel. Exhausting the prime budget returns `None` and the caller
//! falls back to exact elimination.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::matrix::{Matrix, Vector};
use crate::scalar::{is_prime, Scalar, MAX_PRIME};

/// Primes tried before giving up; bounds the lift at roughly 31 bits per prime.
const MAX_PRIMES: usize = 96;

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn residue(n: &BigInt, p: u64) -> u64 {
    n.mod_floor(&BigInt::from(p)).to_u64().expect("residue below p")
}

/// The `MAX_PRIMES` largest primes not above `MAX_PRIME`, decreasing.
fn primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| (3..=MAX_PRIME).rev().filter(|&n| n % 2 == 1 && is_prime(n)).take(MAX_PRIMES).collect())
}

/// Reduced echelon form mod `p` in place; returns pivot columns.
fn rref_mod(data: &mut [u64], rows: usize, cols: usize, p: u64) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| data[i * cols + c] != 0) else {
            continue;
        };
        if pr != r {
            for j in 0..cols {
                data.swap(pr * cols + j, r * cols + j);
            }
        }
        let iv = inv_mod(data[r * cols + c], p);
        for j in c..cols {
            data[r * cols + j] = data[r * cols + j] * iv % p;
        }
        for i in 0..rows {
            let f = data[i * cols + c];
            if i == r || f == 0 {
                continue;
            }
            for j in c..cols {
                let x = data[r * cols + j];
                if x != 0 {
                    data[i * cols + j] = (data[i * cols + j] + p - f * x % p) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// The fraction `n/d` with `|n|, d ≤ sqrt(m/2)` congruent to `a` mod `m`, if any.
fn reconstruct(a: &BigInt, m: &BigInt) -> Option<BigRational> {
    let bound = (m >> 1u32).sqrt();
    let (mut r0, mut r1) = (m.clone(), a.clone());
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        (r0, r1) = (r1, r2);
        (t0, t1) = (t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound {
        return None;
    }
    Some(BigRational::new(r1, t1))
}

/// Integer rows with the same kernel, or `None` off Q.
fn integer_rows(m: &Matrix) -> Option<Vec<BigInt>> {
    let cols = m.cols();
    let mut out = Vec::with_capacity(m.rows() * cols);
    for i in 0..m.rows() {
        let mut lcm = BigInt::one();
        for j in 0..cols {
            let Scalar::Rational(q) = m.get(i, j) else { return None };
            lcm = lcm.lcm(q.denom());
        }
        for j in 0..cols {
            let Scalar::Rational(q) = m.get(i, j) else { return None };
            out.push(q.numer() * (&lcm / q.denom()));
        }
    }
    Some(out)
}

fn kernel_from_rref(data: &[u64], cols: usize, pivots: &[usize], p: u64) -> Vec<Vector> {
    let residue_of = |value| Scalar::Residue { value, p };
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![residue_of(0); cols];
            v[free] = residue_of(1);
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = residue_of((p - data[i * cols + free]) % p);
            }
            v
        })
        .collect()
}

/// Kernel basis of a matrix over the prime field of order `p`.
pub(crate) fn prime_kernel(m: &Matrix, p: u64) -> Vec<Vector> {
    let mut data: Vec<u64> = m
        .as_flat()
        .iter()
        .map(|s| match s {
            Scalar::Residue { value, .. } => *value,
            Scalar::Rational(_) => unreachable!("matrix entries share the matrix field"),
        })
        .collect();
    let pivots = rref_mod(&mut data, m.rows(), m.cols(), p);
    kernel_from_rref(&data, m.cols(), &pivots, p)
}

/// Exact kernel basis of a rational matrix, or `None` if the lift fails.
pub(crate) fn rational_kernel(m: &Matrix) -> Option<Vec<Vector>> {
    let (rows, cols) = (m.rows(), m.cols());
    let ints = integer_rows(m)?;
    // Best pivot pattern so far: larger rank, then lexicographically smaller pivots.
    let mut pivots: Option<Vec<usize>> = None;
    let mut modulus = BigInt::one();
    let mut acc: Vec<BigInt> = Vec::new();
    // Primes combined into `modulus`; lifting is attempted at powers of two.
    let mut used = 0usize;
    for &p in primes() {
        let mut data: Vec<u64> = ints.iter().map(|n| residue(n, p)).collect();
        let piv = rref_mod(&mut data, rows, cols, p);
        let free: Vec<usize> = (0..cols).filter(|c| !piv.contains(c)).collect();
        let entries: Vec<u64> = (0..piv.len())
            .flat_map(|i| free.iter().map(move |&f| (i, f)))
            .map(|(i, f)| data[i * cols + f])
            .collect();
        let better = match &pivots {
            None => true,
            Some(best) => piv.len() > best.len() || (piv.len() == best.len() && piv < *best),
        };
        if better {
            pivots = Some(piv);
            modulus = BigInt::from(p);
            acc = entries.into_iter().map(BigInt::from).collect();
            used = 1;
        } else if pivots.as_ref() == Some(&piv) {
            let m_inv = inv_mod(residue(&modulus, p), p);
            for (a, r) in acc.iter_mut().zip(entries) {
                let diff = (r + p - residue(a, p)) % p;
                *a += &modulus * BigInt::from(diff * m_inv % p);
            }
            modulus *= p;
            used += 1;
        } else {
            continue;
        }
        if !used.is_power_of_two() {
            continue;
        }
        let piv = pivots.as_ref().expect("set above");
        if let Some(vectors) = lift(&ints, cols, piv, &acc, &modulus) {
            return Some(vectors);
        }
    }
    None
}

fn lift(ints: &[BigInt], cols: usize, pivots: &[usize], acc: &[BigInt], modulus: &BigInt) -> Option<Vec<Vector>> {
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let zero = Scalar::Rational(BigRational::zero());
    let mut out = Vec::with_capacity(free.len());
    for (k, &f) in free.iter().enumerate() {
        let mut v = vec![zero.clone(); cols];
        v[f] = Scalar::Rational(BigRational::one());
        for (i, &p) in pivots.iter().enumerate() {
            let e = &acc[i * free.len() + k];
            if !e.is_zero() {
                v[p] = Scalar::Rational(-reconstruct(e, modulus)?);
            }
        }
        out.push(v);
    }
    out.iter().all(|v| annihilates(ints, cols, v)).then_some(out)
}

/// Exact check `m v = 0` on the integer rows of `m`, with `v` cleared of denominators.
fn annihilates(ints: &[BigInt], cols: usize, v: &[Scalar]) -> bool {
    let mut lcm = BigInt::one();
    let mut support = Vec::new();
    for (j, s) in v.iter().enumerate() {
        if let Scalar::Rational(q) = s {
            if !q.is_zero() {
                lcm = lcm.lcm(q.denom());
                support.push((j, q));
            }
        }
    }
    let scaled: Vec<(usize, BigInt)> = support.into_iter().map(|(j, q)| (j, q.numer() * (&lcm / q.denom()))).collect();
    ints.chunks(cols).all(|row| {
        let mut acc = BigInt::zero();
        for (j, x) in &scaled {
            if !row[*j].is_zero() {
                acc += &row[*j] * x;
            }
        }
        acc.is_zero()
    })
}
