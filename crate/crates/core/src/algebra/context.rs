use std::fmt;

use crate::error::{Error, Result};

/// Role of an odd generator in the standard basis of `R^{0|a+b}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OddRole {
    Zeta(usize),
    Eta(usize),
    Xi(usize),
    Mu(usize),
    Upsilon,
}

impl fmt::Display for OddRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OddRole::Zeta(i) => write!(f, "zeta{i}"),
            OddRole::Eta(i) => write!(f, "eta{i}"),
            OddRole::Xi(i) => write!(f, "xi{i}"),
            OddRole::Mu(i) => write!(f, "mu{i}"),
            OddRole::Upsilon => write!(f, "upsilon"),
        }
    }
}

/// A generator of the Weyl-Clifford algebra. Indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    P(usize),
    Q(usize),
    /// `θ_k` in the orientation order.
    Theta(usize),
}

/// The type `(2n|a,b)` together with the quadratic form and orientation.
///
/// Odd generators are ordered `θ_1 = ζ_1, θ_2 = η_1, …, ζ_a, η_a, ξ_1, μ_1,
/// …, ξ_ẑ, μ_ẑ, υ`, so the orientation monomial is `θ_1⋯θ_{a+b}`. In that
/// order `h_Q` pairs `θ_{2i-1}` with `θ_{2i}` for `i ≤ a` and is `-1` on
/// the remaining diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraContext {
    n: usize,
    a: usize,
    b: usize,
    zhat: usize,
    h: Vec<Vec<i64>>,
    odd_names: Vec<OddRole>,
}

/// Largest number of odd generators a bitmask monomial can hold.
pub const MAX_ODD: usize = 31;

impl AlgebraContext {
    pub fn new(n: usize, a: usize, b: usize) -> Result<Self> {
        if a > b {
            return Err(Error::InvalidContext(format!(
                "a = {a} > b = {b}; swap the signature (SO(a,b) ≅ SO(b,a))"
            )));
        }
        if a + b > MAX_ODD {
            return Err(Error::InvalidContext(format!(
                "a + b = {} exceeds {MAX_ODD} odd generators",
                a + b
            )));
        }
        let zhat = (b - a) / 2;
        let mut odd_names = Vec::with_capacity(a + b);
        for i in 1..=a {
            odd_names.push(OddRole::Zeta(i));
            odd_names.push(OddRole::Eta(i));
        }
        for j in 1..=zhat {
            odd_names.push(OddRole::Xi(j));
            odd_names.push(OddRole::Mu(j));
        }
        if (b - a) % 2 == 1 {
            odd_names.push(OddRole::Upsilon);
        }
        let m = a + b;
        let mut h = vec![vec![0i64; m]; m];
        for i in 0..a {
            h[2 * i][2 * i + 1] = 1;
            h[2 * i + 1][2 * i] = 1;
        }
        for (k, row) in h.iter_mut().enumerate().skip(2 * a) {
            row[k] = -1;
        }
        Ok(AlgebraContext {
            n,
            a,
            b,
            zhat,
            h,
            odd_names,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn zhat(&self) -> usize {
        self.zhat
    }

    pub fn has_upsilon(&self) -> bool {
        (self.b - self.a) % 2 == 1
    }

    pub fn num_even(&self) -> usize {
        2 * self.n
    }

    pub fn num_odd(&self) -> usize {
        self.a + self.b
    }

    /// Integer matrix `h_Q` in θ-order.
    pub fn h(&self) -> &[Vec<i64>] {
        &self.h
    }

    pub fn h_entry(&self, i: usize, j: usize) -> i64 {
        self.h[i][j]
    }

    pub fn odd_names(&self) -> &[OddRole] {
        &self.odd_names
    }

    /// Bitmask of the orientation monomial `Θ`.
    pub fn orientation_mask(&self) -> u32 {
        if self.num_odd() == 0 {
            0
        } else {
            (1u32 << self.num_odd()) - 1
        }
    }

    /// 0-based θ-index of a named odd generator.
    pub fn odd_index(&self, role: OddRole) -> Result<usize> {
        self.odd_names
            .iter()
            .position(|r| *r == role)
            .ok_or_else(|| Error::UnknownVariable(role.to_string()))
    }

    pub fn zeta(&self, i: usize) -> Result<usize> {
        self.odd_index(OddRole::Zeta(i))
    }

    pub fn eta(&self, i: usize) -> Result<usize> {
        self.odd_index(OddRole::Eta(i))
    }

    pub fn xi(&self, j: usize) -> Result<usize> {
        self.odd_index(OddRole::Xi(j))
    }

    pub fn mu(&self, j: usize) -> Result<usize> {
        self.odd_index(OddRole::Mu(j))
    }

    /// Position in the even exponent vector (`p`'s first, then `q`'s).
    pub fn even_slot(&self, var: Var) -> Option<usize> {
        match var {
            Var::P(i) if (1..=self.n).contains(&i) => Some(i - 1),
            Var::Q(i) if (1..=self.n).contains(&i) => Some(self.n + i - 1),
            _ => None,
        }
    }

    pub fn check_var(&self, var: Var) -> Result<()> {
        let ok = match var {
            Var::P(i) | Var::Q(i) => (1..=self.n).contains(&i),
            Var::Theta(k) => (1..=self.num_odd()).contains(&k),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::UnknownVariable(format!("{var:?}")))
        }
    }

    /// The quadratic form `Q(v) = cᵀ H_Q c` with `H_Q = h_Q / 2`.
    pub fn quadratic_form(&self, c: &[crate::rational::Rational]) -> crate::rational::Rational {
        use crate::rational::{int, Rational};
        use num_traits::Zero;
        let mut acc = Rational::zero();
        for i in 0..self.num_odd() {
            for j in 0..self.num_odd() {
                if self.h[i][j] != 0 {
                    acc += &c[i] * &c[j] * int(self.h[i][j]);
                }
            }
        }
        acc / int(2)
    }

    /// Short label such as `(4|1,1)`.
    pub fn label(&self) -> String {
        format!("({}|{},{})", 2 * self.n, self.a, self.b)
    }
}
