//! Subsystem dimensions and mixed-radix index arithmetic.
//!
//! Every conversion between a global (flat) basis index and per-subsystem
//! indices goes through [`DimensionSpec::flat_index`] and
//! [`DimensionSpec::multi_index`]. Indices are zero-based throughout; the
//! first subsystem is the most significant digit.

use crate::error::{Error, Result};

/// Ordered list of subsystem dimensions `(d_1, ..., d_nss)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DimensionSpec {
    dims: Vec<usize>,
    /// `strides[s]` = product of dims after `s`.
    strides: Vec<usize>,
    total: usize,
}

impl DimensionSpec {
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::Dimension(
                "at least one subsystem is required".into(),
            ));
        }
        if let Some(s) = dims.iter().position(|&d| d == 0) {
            return Err(Error::Dimension(format!("subsystem {s} has dimension 0")));
        }
        let mut strides = vec![1usize; dims.len()];
        for s in (0..dims.len() - 1).rev() {
            strides[s] = strides[s + 1]
                .checked_mul(dims[s + 1])
                .ok_or_else(|| Error::Dimension("total dimension overflows".into()))?;
        }
        let total = strides[0]
            .checked_mul(dims[0])
            .ok_or_else(|| Error::Dimension("total dimension overflows".into()))?;
        Ok(Self {
            dims,
            strides,
            total,
        })
    }

    /// `n` qubits.
    pub fn qubits(n: usize) -> Result<Self> {
        Self::new(vec![2; n])
    }

    #[inline]
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Number of subsystems.
    #[inline]
    pub fn nss(&self) -> usize {
        self.dims.len()
    }

    /// Product of all subsystem dimensions.
    #[inline]
    pub fn total_dim(&self) -> usize {
        self.total
    }

    #[inline]
    pub(crate) fn strides(&self) -> &[usize] {
        &self.strides
    }

    /// Global index of the product basis vector `|j_1 j_2 ... j_nss>`:
    /// `sum_s j_s * prod(dims after s)`.
    pub fn flat_index(&self, multi: &[usize]) -> Result<usize> {
        if multi.len() != self.nss() {
            return Err(Error::Dimension(format!(
                "multi-index has {} components, spec has {} subsystems",
                multi.len(),
                self.nss()
            )));
        }
        let mut flat = 0;
        for (s, (&j, &d)) in multi.iter().zip(&self.dims).enumerate() {
            if j >= d {
                return Err(Error::Index(format!(
                    "component {s} is {j}, subsystem dimension is {d}"
                )));
            }
            flat += j * self.strides[s];
        }
        Ok(flat)
    }

    /// Inverse of [`flat_index`](Self::flat_index).
    pub fn multi_index(&self, flat: usize) -> Result<Vec<usize>> {
        if flat >= self.total {
            return Err(Error::Index(format!(
                "flat index {flat} outside [0, {})",
                self.total
            )));
        }
        let mut out = vec![0; self.nss()];
        self.fill_multi_index(flat, &mut out);
        Ok(out)
    }

    /// Unchecked digit decomposition into a caller-provided buffer.
    #[inline]
    pub(crate) fn fill_multi_index(&self, mut flat: usize, out: &mut [usize]) {
        for (s, slot) in out.iter_mut().enumerate() {
            let stride = self.strides[s];
            *slot = flat / stride;
            flat %= stride;
        }
    }
}

/// Per-subsystem transpose flags; `true` means "transpose this subsystem".
///
/// This is the inverse of the 0/1 `ssys` convention used by some Fortran-era
/// tools, where 0 marks a subsystem to be transposed. Use
/// [`TransposeMask::from_ssys`] to convert.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TransposeMask {
    flags: Vec<bool>,
}

impl TransposeMask {
    pub fn new(flags: Vec<bool>) -> Self {
        Self { flags }
    }

    /// Converts an `ssys` vector (0 = transpose, 1 = leave alone).
    pub fn from_ssys(ssys: &[u8]) -> Result<Self> {
        ssys.iter()
            .enumerate()
            .map(|(s, &v)| match v {
                0 => Ok(true),
                1 => Ok(false),
                other => Err(Error::Argument(format!(
                    "ssys entry {s} is {other}, expected 0 or 1"
                ))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }

    /// Transpose exactly one subsystem out of `nss`.
    pub fn single(nss: usize, which: usize) -> Self {
        Self::new((0..nss).map(|s| s == which).collect())
    }

    pub fn none(nss: usize) -> Self {
        Self::new(vec![false; nss])
    }

    pub fn all(nss: usize) -> Self {
        Self::new(vec![true; nss])
    }

    #[inline]
    pub fn flags(&self) -> &[bool] {
        &self.flags
    }

    pub fn len(&self) -> usize {
        self.flags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flags.is_empty()
    }

    /// Back to the `ssys` convention.
    pub fn to_ssys(&self) -> Vec<u8> {
        self.flags.iter().map(|&t| if t { 0 } else { 1 }).collect()
    }

    pub fn check_against(&self, spec: &DimensionSpec) -> Result<()> {
        if self.len() != spec.nss() {
            return Err(Error::Dimension(format!(
                "mask has {} flags, spec has {} subsystems",
                self.len(),
                spec.nss()
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(d: &[usize]) -> DimensionSpec {
        DimensionSpec::new(d.to_vec()).unwrap()
    }

    #[test]
    fn flat_index_examples() {
        assert_eq!(spec(&[2, 2]).flat_index(&[1, 0]).unwrap(), 2);
        assert_eq!(spec(&[2, 2, 2]).flat_index(&[1, 1, 1]).unwrap(), 7);
        assert_eq!(spec(&[2, 3, 4]).flat_index(&[0, 2, 1]).unwrap(), 9);
    }

    #[test]
    fn multi_index_examples() {
        assert_eq!(spec(&[2, 3, 4]).multi_index(9).unwrap(), vec![0, 2, 1]);
        assert_eq!(spec(&[3, 5]).multi_index(0).unwrap(), vec![0, 0]);
        assert_eq!(spec(&[2, 2, 2]).multi_index(7).unwrap(), vec![1, 1, 1]);
    }

    #[test]
    fn out_of_range_is_an_index_error() {
        assert!(matches!(
            spec(&[2, 3]).flat_index(&[0, 3]),
            Err(Error::Index(_))
        ));
        assert!(matches!(spec(&[2, 3]).multi_index(6), Err(Error::Index(_))));
        assert!(matches!(
            spec(&[2, 3]).flat_index(&[0]),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn rejects_degenerate_specs() {
        assert!(DimensionSpec::new(vec![]).is_err());
        assert!(DimensionSpec::new(vec![2, 0]).is_err());
    }

    #[test]
    fn ssys_is_inverted() {
        let m = TransposeMask::from_ssys(&[1, 0]).unwrap();
        assert_eq!(m.flags(), &[false, true]);
        assert_eq!(m.to_ssys(), vec![1, 0]);
        assert!(TransposeMask::from_ssys(&[2]).is_err());
    }
}
