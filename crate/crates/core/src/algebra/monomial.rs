use std::cmp::Ordering;

use smallvec::SmallVec;

pub type EvenExponents = SmallVec<[u32; 8]>;

/// `ħ^k · p^α q^β · θ_S` with `θ_S` the increasing product over the bits of `odd`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub even: EvenExponents,
    pub odd: u32,
    pub hbar: u32,
}

impl Monomial {
    pub fn one(num_even: usize) -> Self {
        Monomial {
            even: SmallVec::from_elem(0, num_even),
            odd: 0,
            hbar: 0,
        }
    }

    pub fn odd_degree(&self) -> u32 {
        self.odd.count_ones()
    }

    pub fn even_degree(&self) -> u32 {
        self.even.iter().sum()
    }

    pub fn parity(&self) -> u32 {
        self.odd.count_ones() & 1
    }

    /// Degree with `ħ` counted twice, as for the Moyal grading.
    pub fn weight(&self) -> u32 {
        self.even_degree() + self.odd_degree() + 2 * self.hbar
    }

    pub fn is_even_free(&self) -> bool {
        self.even.iter().all(|&e| e == 0)
    }
}

/// Sign and mask of the supercommutative product `θ_x θ_y`.
pub fn odd_product(x: u32, y: u32) -> Option<(u32, bool)> {
    if x & y != 0 {
        return None;
    }
    let mut swaps = 0u32;
    let mut rest = y;
    while rest != 0 {
        let j = rest.trailing_zeros();
        swaps += (x >> j).count_ones();
        rest &= rest - 1;
    }
    Some((x | y, swaps & 1 == 1))
}

/// Left derivative `∂/∂θ_m` of `θ_x`: the remaining mask and whether the sign is negative.
pub fn odd_left_derivative(x: u32, m: usize) -> Option<(u32, bool)> {
    let bit = 1u32 << m;
    if x & bit == 0 {
        return None;
    }
    let below = x & (bit - 1);
    Some((x & !bit, below.count_ones() & 1 == 1))
}

/// Product of two monomials; `None` if the odd parts overlap. The flag is the sign.
pub fn mul_monomials(x: &Monomial, y: &Monomial) -> Option<(Monomial, bool)> {
    let (odd, neg) = odd_product(x.odd, y.odd)?;
    let even = x.even.iter().zip(&y.even).map(|(a, b)| a + b).collect();
    Some((
        Monomial {
            even,
            odd,
            hbar: x.hbar + y.hbar,
        },
        neg,
    ))
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.hbar.cmp(&other.hbar))
            .then_with(|| other.even.cmp(&self.even))
            .then_with(|| self.odd_degree().cmp(&other.odd_degree()))
            .then_with(|| self.odd.reverse_bits().cmp(&other.odd.reverse_bits()).reverse())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
