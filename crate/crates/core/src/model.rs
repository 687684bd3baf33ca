//! Channel parameters: antenna counts and SNR/INR exponents.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{int, pos, Rational};

/// Antenna counts of the `(M1, N1, M2, N2)` interference channel.
///
/// `M_i` counts transmit antennas at Tx i, `N_i` receive antennas at Rx i.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AntennaConfig {
    m1: u32,
    n1: u32,
    m2: u32,
    n2: u32,
}

impl AntennaConfig {
    pub fn new(m1: u32, n1: u32, m2: u32, n2: u32) -> Result<Self> {
        if m1 == 0 || n1 == 0 || m2 == 0 || n2 == 0 {
            return Err(Error::ZeroAntennas);
        }
        Ok(Self { m1, n1, m2, n2 })
    }

    pub fn m1(&self) -> u32 {
        self.m1
    }
    pub fn n1(&self) -> u32 {
        self.n1
    }
    pub fn m2(&self) -> u32 {
        self.m2
    }
    pub fn n2(&self) -> u32 {
        self.n2
    }

    /// Transmit antennas of user `i` (1 or 2).
    pub fn tx(&self, i: usize) -> u32 {
        if i == 1 {
            self.m1
        } else {
            self.m2
        }
    }

    /// Receive antennas of user `i` (1 or 2).
    pub fn rx(&self, i: usize) -> u32 {
        if i == 1 {
            self.n1
        } else {
            self.n2
        }
    }

    /// `m_ij = min(M_i, N_j)`, the rank of the link from Tx i to Rx j.
    pub fn rank(&self, i: usize, j: usize) -> u32 {
        self.tx(i).min(self.rx(j))
    }

    /// `(M_i - N_j)^+`, the null-space dimension of the link from Tx i to Rx j.
    pub fn null_dim(&self, i: usize, j: usize) -> u32 {
        self.tx(i).saturating_sub(self.rx(j))
    }

    /// Same channel with the roles of transmitters and receivers exchanged.
    pub fn reciprocal(&self) -> Self {
        Self {
            m1: self.n1,
            n1: self.m1,
            m2: self.n2,
            n2: self.m2,
        }
    }

    pub fn as_array(&self) -> [u32; 4] {
        [self.m1, self.n1, self.m2, self.n2]
    }
}

/// The exponents `[a11, a12, a21, a22]` with `rho_ij = rho^a_ij`.
///
/// `a_ij` is the strength of the link from Tx i to Rx j. `a11` is pinned to 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExponentProfile {
    a: [Rational; 4],
}

impl ExponentProfile {
    pub fn new(a11: Rational, a12: Rational, a21: Rational, a22: Rational) -> Result<Self> {
        if !a11.is_one() {
            return Err(Error::DirectExponentNotOne(a11));
        }
        for x in [&a12, &a21, &a22] {
            if x.is_negative() {
                return Err(Error::NegativeExponent(x.clone()));
            }
        }
        Ok(Self {
            a: [a11, a12, a21, a22],
        })
    }

    /// `[1, alpha, alpha, 1]`.
    pub fn symmetric(alpha: Rational) -> Result<Self> {
        Self::new(int(1), alpha.clone(), alpha, int(1))
    }

    /// `[1, 1, 1, 1]`, the classical DoF setting.
    pub fn unit() -> Self {
        Self {
            a: [int(1), int(1), int(1), int(1)],
        }
    }

    pub fn a11(&self) -> &Rational {
        &self.a[0]
    }
    pub fn a12(&self) -> &Rational {
        &self.a[1]
    }
    pub fn a21(&self) -> &Rational {
        &self.a[2]
    }
    pub fn a22(&self) -> &Rational {
        &self.a[3]
    }

    /// Exponent of the link from Tx i to Rx j.
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        match (i, j) {
            (1, 1) => &self.a[0],
            (1, 2) => &self.a[1],
            (2, 1) => &self.a[2],
            _ => &self.a[3],
        }
    }

    /// `beta_ij = (a_ii - a_ij)^+`: level at which user i's private streams,
    /// sent at the noise floor of Rx j, arrive at their own receiver.
    pub fn beta(&self, i: usize, j: usize) -> Rational {
        pos(&(self.get(i, i) - self.get(i, j)))
    }

    pub fn reciprocal(&self) -> Self {
        Self {
            a: [
                self.a[0].clone(),
                self.a[2].clone(),
                self.a[1].clone(),
                self.a[3].clone(),
            ],
        }
    }

    pub fn as_array(&self) -> &[Rational; 4] {
        &self.a
    }
}

/// One `(exponent, width)` argument of the MAC sum-GDoF functions: a virtual
/// transmitter with `width` antennas received at level `rho^exponent`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightedTerm {
    pub exponent: Rational,
    pub width: u32,
}

impl WeightedTerm {
    pub fn new(exponent: Rational, width: u32) -> Self {
        Self { exponent, width }
    }
}

/// GDoF carried by the private (`p`) and public (`c`) sub-messages.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SplitTuple {
    pub d1p: Rational,
    pub d1c: Rational,
    pub d2p: Rational,
    pub d2c: Rational,
}

impl SplitTuple {
    pub fn new(d1p: Rational, d1c: Rational, d2p: Rational, d2c: Rational) -> Self {
        Self { d1p, d1c, d2p, d2c }
    }

    /// Coordinates in the `(d1p, d1c, d2p, d2c)` order used by split regions.
    pub fn to_vec(&self) -> alloc::vec::Vec<Rational> {
        alloc::vec![
            self.d1p.clone(),
            self.d1c.clone(),
            self.d2p.clone(),
            self.d2c.clone()
        ]
    }

    pub fn d1(&self) -> Rational {
        &self.d1p + &self.d1c
    }

    pub fn d2(&self) -> Rational {
        &self.d2p + &self.d2c
    }

    pub fn is_nonnegative(&self) -> bool {
        [&self.d1p, &self.d1c, &self.d2p, &self.d2c]
            .iter()
            .all(|x| !x.is_negative() || x.is_zero())
    }
}
