//! Signed Pauli strings in the symplectic bit-vector encoding.
//!
//! A string stores a z-vector, an x-vector and a sign bit `r`; qubit `i`
//! carries `I` (00), `X` (x=1), `Z` (z=1) or `Y` (both). The operator is
//! `(-1)^r` times the tensor product, so the coefficient is always real.

use std::fmt;
use std::str::FromStr;

use crate::bits::BitVec;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliString {
    z: BitVec,
    x: BitVec,
    sign: bool,
}

impl PauliString {
    pub fn identity(n: usize) -> Self {
        PauliString {
            z: BitVec::zeros(n),
            x: BitVec::zeros(n),
            sign: false,
        }
    }

    pub fn from_parts(z: BitVec, x: BitVec, sign: bool) -> Self {
        assert_eq!(z.len(), x.len(), "z and x vectors differ in length");
        PauliString { z, x, sign }
    }

    /// `Z` on qubit `q`, identity elsewhere.
    pub fn single_z(n: usize, q: usize) -> Result<Self> {
        if q >= n {
            return Err(Error::QubitOutOfRange { index: q, n });
        }
        let mut p = Self::identity(n);
        p.z.set(q, true);
        Ok(p)
    }

    pub fn single_x(n: usize, q: usize) -> Result<Self> {
        if q >= n {
            return Err(Error::QubitOutOfRange { index: q, n });
        }
        let mut p = Self::identity(n);
        p.x.set(q, true);
        Ok(p)
    }

    /// Diagonal string with the given z-vector and positive sign.
    pub fn from_z(z: BitVec) -> Self {
        let n = z.len();
        PauliString {
            z,
            x: BitVec::zeros(n),
            sign: false,
        }
    }

    #[inline]
    pub fn num_qubits(&self) -> usize {
        self.z.len()
    }

    #[inline]
    pub fn z(&self) -> &BitVec {
        &self.z
    }

    #[inline]
    pub fn x(&self) -> &BitVec {
        &self.x
    }

    #[inline]
    pub fn z_mut(&mut self) -> &mut BitVec {
        &mut self.z
    }

    #[inline]
    pub fn x_mut(&mut self) -> &mut BitVec {
        &mut self.x
    }

    #[inline]
    pub fn sign(&self) -> bool {
        self.sign
    }

    #[inline]
    pub fn set_sign(&mut self, sign: bool) {
        self.sign = sign;
    }

    pub fn negate(&mut self) {
        self.sign = !self.sign;
    }

    pub fn negated(mut self) -> Self {
        self.negate();
        self
    }

    pub fn with_sign(mut self, sign: bool) -> Self {
        self.sign = sign;
        self
    }

    pub fn is_diagonal(&self) -> bool {
        self.x.is_zero()
    }

    pub fn is_identity(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    pub fn weight(&self) -> usize {
        self.z
            .words()
            .iter()
            .zip(self.x.words())
            .map(|(a, b)| (a | b).count_ones() as usize)
            .sum()
    }

    fn check_dims(&self, other: &PauliString) -> Result<()> {
        if self.num_qubits() != other.num_qubits() {
            return Err(Error::DimensionMismatch {
                left: self.num_qubits(),
                right: other.num_qubits(),
            });
        }
        Ok(())
    }

    pub fn commutes(&self, other: &PauliString) -> Result<bool> {
        self.check_dims(other)?;
        Ok(self.commutes_unchecked(other))
    }

    pub(crate) fn commutes_unchecked(&self, other: &PauliString) -> bool {
        self.z.dot(&other.x) == self.x.dot(&other.z)
    }

    /// Returns `(c, k)` such that `self · other = i^k · c`, where `c` carries
    /// a positive sign and all phase is collected in `k` (mod 4).
    pub fn multiply(&self, other: &PauliString) -> Result<(PauliString, u8)> {
        self.check_dims(other)?;
        let mut out = self.clone();
        let k = out.mul_assign_phase(other);
        out.sign = false;
        Ok((out, k))
    }

    /// In-place right multiplication ignoring any sign bookkeeping; returns
    /// the full phase exponent (mod 4) of the product, including both signs.
    pub(crate) fn mul_assign_phase(&mut self, other: &PauliString) -> u8 {
        let mut pos = 0u32;
        let mut neg = 0u32;
        for i in 0..self.z.words().len() {
            let (x1, z1) = (self.x.words()[i], self.z.words()[i]);
            let (x2, z2) = (other.x.words()[i], other.z.words()[i]);
            let (a1, b1, c1) = (x1 & !z1, x1 & z1, !x1 & z1);
            let (a2, b2, c2) = (x2 & !z2, x2 & z2, !x2 & z2);
            // XY = iZ, YZ = iX, ZX = iY and reversed orders give -i
            pos += ((a1 & b2) | (b1 & c2) | (c1 & a2)).count_ones();
            neg += ((a1 & c2) | (b1 & a2) | (c1 & b2)).count_ones();
        }
        self.x.xor_assign(&other.x);
        self.z.xor_assign(&other.z);
        let signs = 2 * (self.sign as u32 + other.sign as u32);
        ((signs + pos + 3 * neg) % 4) as u8
    }

    /// Right-multiplies by a commuting factor, keeping the result in 𝒫*.
    /// Panics when the accumulated phase is imaginary.
    pub(crate) fn mul_assign_hermitian(&mut self, other: &PauliString) {
        let k = self.mul_assign_phase(other);
        assert!(k.is_multiple_of(2), "product left the real Pauli group");
        self.sign = k == 2;
    }

    // -- conjugation by the primitive generators (P ↦ g P g†) --

    pub(crate) fn conj_h(&mut self, q: usize) {
        let (x, z) = (self.x.get(q), self.z.get(q));
        self.sign ^= x & z;
        self.x.set(q, z);
        self.z.set(q, x);
    }

    pub(crate) fn conj_s(&mut self, q: usize) {
        let (x, z) = (self.x.get(q), self.z.get(q));
        self.sign ^= x & z;
        self.z.set(q, z ^ x);
    }

    pub(crate) fn conj_cx(&mut self, c: usize, t: usize) {
        let (xc, zc, xt, zt) = (self.x.get(c), self.z.get(c), self.x.get(t), self.z.get(t));
        self.sign ^= xc & zt & !(xt ^ zc);
        self.x.set(t, xt ^ xc);
        self.z.set(c, zc ^ zt);
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.sign { "-" } else { "+" })?;
        for q in 0..self.num_qubits() {
            let c = match (self.x.get(q), self.z.get(q)) {
                (false, false) => 'I',
                (true, false) => 'X',
                (false, true) => 'Z',
                (true, true) => 'Y',
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for PauliString {
    type Err = Error;

    /// Parses `"+XZI"`, `"-Y"` or an unsigned `"ZZ"`; qubit 0 is leftmost.
    fn from_str(s: &str) -> Result<Self> {
        let (sign, body) = match s.as_bytes().first() {
            Some(b'+') => (false, &s[1..]),
            Some(b'-') => (true, &s[1..]),
            _ => (false, s),
        };
        let n = body.chars().count();
        let mut p = PauliString::identity(n);
        p.sign = sign;
        for (q, c) in body.chars().enumerate() {
            match c {
                'I' => {}
                'X' => p.x.set(q, true),
                'Z' => p.z.set(q, true),
                'Y' => {
                    p.x.set(q, true);
                    p.z.set(q, true);
                }
                _ => return Err(Error::BadPauli(s.to_string())),
            }
        }
        Ok(p)
    }
}
