//! Exact real-root counting with Sturm sequences.
//!
//! Remainders are taken as primitive pseudo-remainders, rescaled so that
//! every element of the chain differs from the classical Sturm chain by a
//! positive factor. Sign variations are therefore unchanged and everything
//! stays in integer arithmetic.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::poly::Polynomial;

pub fn sturm_chain(p: &Polynomial) -> Vec<Polynomial> {
    let mut chain = vec![p.primitive(), p.derivative().primitive()];
    loop {
        let (a, b) = (&chain[chain.len() - 2], &chain[chain.len() - 1]);
        if b.is_zero() {
            chain.pop();
            break;
        }
        let delta = a.degree().unwrap_or(0) - b.degree().unwrap();
        let mut r = a.pseudo_rem(b);
        // prem multiplies by lc(b)^(delta+1); undo a negative factor.
        if b.leading().is_negative() && delta % 2 == 0 {
            r = -r;
        }
        if r.is_zero() {
            break;
        }
        chain.push((-r).primitive());
    }
    chain
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Point {
    NegInf,
    PosInf,
    At(i64),
}

fn sign_at(p: &Polynomial, at: Point) -> i8 {
    let s = match at {
        Point::PosInf => p.leading(),
        Point::NegInf => {
            let lc = p.leading();
            if p.degree().unwrap_or(0) % 2 == 1 {
                -lc
            } else {
                lc
            }
        }
        Point::At(x) => p.eval(&BigInt::from(x)),
    };
    if s.is_zero() {
        0
    } else if s.is_positive() {
        1
    } else {
        -1
    }
}

pub fn variations(chain: &[Polynomial], at: Point) -> usize {
    let signs: Vec<i8> = chain.iter().map(|p| sign_at(p, at)).filter(|&s| s != 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots of `p` in the half-open interval `(a, b]`,
/// where neither endpoint is a root.
pub fn count_roots_between(p: &Polynomial, a: Point, b: Point) -> usize {
    let chain = sturm_chain(p);
    variations(&chain, a) - variations(&chain, b)
}

/// Number of distinct real roots of a nonzero polynomial.
pub fn count_real_roots(p: &Polynomial) -> usize {
    assert!(!p.is_zero());
    if p.degree() == Some(0) {
        return 0;
    }
    count_roots_between(p, Point::NegInf, Point::PosInf)
}

/// `p / gcd(p, p')`, primitive with positive leading coefficient.
pub fn squarefree_part(p: &Polynomial) -> Polynomial {
    let g = p.gcd(&p.derivative());
    let q = p.primitive().exact_div(&g).expect("gcd divides p");
    if q.leading().is_negative() {
        -q
    } else {
        q
    }
}
