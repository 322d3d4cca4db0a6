//! Monomials as exponent vectors.

/// A monomial in a fixed ring, stored as one exponent per ring variable.
///
/// The derived `Ord` (componentwise-lexicographic on the exponent vector) is
/// only used as a canonical map key; ring-sensitive comparisons go through
/// [`crate::poly::MonomialOrder`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    /// The monomial 1 in a ring with `nvars` variables.
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    /// The variable `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_exponents(e: Vec<u32>) -> Self {
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.0.len(), other.0.len());
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(
            self.0
                .iter()
                .map(|&e| e.checked_mul(k).expect("exponent overflow"))
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        assert_eq!(self.0.len(), other.0.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller must ensure divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| b - a).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.0.len(), other.0.len());
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// True when the supports are disjoint, i.e. `lcm == product`.
    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Re-embeds into a ring with `new_nvars` variables; `positions[i]`
    /// is the index of old variable `i` in the new ring.
    pub fn embed(&self, new_nvars: usize, positions: &[usize]) -> Monomial {
        assert_eq!(positions.len(), self.0.len());
        let mut e = vec![0; new_nvars];
        for (old, &new) in positions.iter().enumerate() {
            e[new] = self.0[old];
        }
        Monomial(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mul_adds_exponents() {
        let a = Monomial::from_exponents(vec![2, 0, 1]);
        let b = Monomial::from_exponents(vec![1, 3, 0]);
        assert_eq!(a.mul(&b), Monomial::from_exponents(vec![3, 3, 1]));
    }

    #[test]
    fn divisibility_and_quotient() {
        let a = Monomial::from_exponents(vec![1, 1, 0]);
        let b = Monomial::from_exponents(vec![2, 1, 3]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.div(&b), Monomial::from_exponents(vec![1, 0, 3]));
    }

    #[test]
    fn lcm_and_coprime() {
        let a = Monomial::from_exponents(vec![2, 0]);
        let b = Monomial::from_exponents(vec![0, 3]);
        assert_eq!(a.lcm(&b), Monomial::from_exponents(vec![2, 3]));
        assert!(a.coprime(&b));
        assert!(!a.coprime(&a));
    }
}
