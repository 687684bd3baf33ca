//! Sum-GDoF of virtual multiple-access channels.
//!
//! `f_mac` and `g_mac` give the high-SNR slope of
//! `log det(I_u + sum_i rho^{a_i} H_i H_i^H)` for two and three full-rank
//! blocks `H_i` of width `u_i`: the `u` receive dimensions are handed out
//! greedily to the strongest blocks first, and each dimension contributes the
//! positive part of its block's exponent.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::model::WeightedTerm;
use crate::rational::{pos, Rational};

/// Greedy dimension allocation over any number of terms.
///
/// Terms are served in order of decreasing exponent; ties keep input order.
pub fn mac_sum_gdof(u: u32, terms: &[WeightedTerm]) -> Rational {
    let mut order: Vec<&WeightedTerm> = terms.iter().collect();
    // stable: equal exponents keep their input order
    order.sort_by(|a, b| b.exponent.cmp(&a.exponent));
    let mut remaining = u;
    let mut total = Rational::zero();
    for t in order {
        let take = remaining.min(t.width);
        if take > 0 {
            total += pos(&t.exponent) * Rational::from_integer(take.into());
        }
        remaining -= take;
    }
    total
}

/// Two-user MAC sum-GDoF `f(u, (a1,u1), (a2,u2))`.
pub fn f_mac(u: u32, t1: &WeightedTerm, t2: &WeightedTerm) -> Rational {
    mac_sum_gdof(u, &[t1.clone(), t2.clone()])
}

/// Three-user MAC sum-GDoF `g(u, (a1,u1), (a2,u2), (a3,u3))`.
pub fn g_mac(u: u32, t1: &WeightedTerm, t2: &WeightedTerm, t3: &WeightedTerm) -> Rational {
    mac_sum_gdof(u, &[t1.clone(), t2.clone(), t3.clone()])
}
