use num_traits::{One, Zero};
use rand::Rng;

use super::monomial::Monomial;
use super::superpoly::{Parity, SuperPolynomial};
use crate::error::{Error, Result};
use crate::rational::{factorial, int, rat, Rational};

/// An even supermatrix of size `(r|s)` with entries in a Grassmann algebra.
///
/// Entries are symbols multiplied supercommutatively; the top-left `r×r` and
/// bottom-right `s×s` blocks hold even elements, the off-diagonal blocks odd ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperMatrix {
    even_dim: usize,
    odd_dim: usize,
    num_even: usize,
    entries: Vec<Vec<SuperPolynomial>>,
}

type Block = Vec<Vec<SuperPolynomial>>;

impl SuperMatrix {
    pub fn new(even_dim: usize, odd_dim: usize, entries: Vec<Vec<SuperPolynomial>>) -> Result<Self> {
        let size = even_dim + odd_dim;
        if entries.len() != size || entries.iter().any(|r| r.len() != size) {
            return Err(Error::DegreeMismatch(format!(
                "expected a {size}x{size} matrix"
            )));
        }
        let num_even = entries
            .first()
            .and_then(|r| r.first())
            .map(SuperPolynomial::num_even)
            .unwrap_or(0);
        for (i, row) in entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                let want = Parity::from_bit(((i >= even_dim) ^ (j >= even_dim)) as u32);
                match e.parity() {
                    _ if e.is_zero() => {}
                    Some(p) if p == want => {}
                    _ => {
                        return Err(Error::DegreeMismatch(format!(
                            "entry ({i},{j}) must be {want:?}"
                        )))
                    }
                }
            }
        }
        Ok(SuperMatrix {
            even_dim,
            odd_dim,
            num_even,
            entries,
        })
    }

    /// A supermatrix with rational entries.
    pub fn from_rational(even_dim: usize, odd_dim: usize, rows: &[Vec<Rational>]) -> Result<Self> {
        let entries = rows
            .iter()
            .map(|r| r.iter().map(|c| scalar(0, c.clone())).collect())
            .collect();
        Self::new(even_dim, odd_dim, entries)
    }

    pub fn identity(even_dim: usize, odd_dim: usize, num_even: usize) -> Self {
        let size = even_dim + odd_dim;
        let entries = (0..size)
            .map(|i| {
                (0..size)
                    .map(|j| {
                        if i == j {
                            scalar(num_even, Rational::one())
                        } else {
                            SuperPolynomial::zero_with(num_even)
                        }
                    })
                    .collect()
            })
            .collect();
        SuperMatrix {
            even_dim,
            odd_dim,
            num_even,
            entries,
        }
    }

    pub fn even_dim(&self) -> usize {
        self.even_dim
    }

    pub fn odd_dim(&self) -> usize {
        self.odd_dim
    }

    pub fn entry(&self, i: usize, j: usize) -> &SuperPolynomial {
        &self.entries[i][j]
    }

    pub fn mul(&self, other: &SuperMatrix) -> Result<SuperMatrix> {
        if self.even_dim != other.even_dim || self.odd_dim != other.odd_dim {
            return Err(Error::DegreeMismatch("supermatrix sizes differ".into()));
        }
        Ok(SuperMatrix {
            entries: mat_mul(&self.entries, &other.entries, self.num_even),
            ..self.clone()
        })
    }

    pub fn add(&self, other: &SuperMatrix) -> SuperMatrix {
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect())
            .collect();
        SuperMatrix {
            entries,
            ..self.clone()
        }
    }

    pub fn scale(&self, c: &Rational) -> SuperMatrix {
        let entries = self
            .entries
            .iter()
            .map(|r| r.iter().map(|x| x.scale(c)).collect())
            .collect();
        SuperMatrix {
            entries,
            ..self.clone()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(SuperPolynomial::is_zero)
    }

    /// Supertranspose `[[A, B], [C, D]] ↦ [[Aᵗ, Cᵗ], [−Bᵗ, Dᵗ]]`.
    pub fn supertranspose(&self) -> SuperMatrix {
        let size = self.even_dim + self.odd_dim;
        let mut entries = vec![vec![SuperPolynomial::zero_with(self.num_even); size]; size];
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                let src = &self.entries[j][i];
                *e = if i >= self.even_dim && j < self.even_dim {
                    -src
                } else {
                    src.clone()
                };
            }
        }
        SuperMatrix {
            entries,
            ..self.clone()
        }
    }

    /// `exp(X)` for a supermatrix whose powers eventually vanish.
    pub fn exp_nilpotent(&self) -> Result<SuperMatrix> {
        let size = self.even_dim + self.odd_dim;
        let limit = 4 * (size + 32);
        let mut acc = SuperMatrix::identity(self.even_dim, self.odd_dim, self.num_even);
        let mut power = acc.clone();
        for k in 1..=limit {
            power = power.mul(self)?;
            if power.is_zero() {
                return Ok(acc);
            }
            acc = acc.add(&power.scale(&Rational::new(1.into(), factorial(k as u32))));
        }
        Err(Error::BoundExceeded("matrix exponential did not terminate".into()))
    }

    fn block(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Block {
        rows.map(|i| self.entries[i][cols.clone()].to_vec()).collect()
    }

    /// `Ber [[A, B], [C, D]] = det(A − B D⁻¹ C) / det D`.
    pub fn berezinian(&self) -> Result<SuperPolynomial> {
        let (r, s) = (self.even_dim, self.odd_dim);
        let size = r + s;
        let a = self.block(0..r, 0..r);
        if s == 0 {
            return Ok(determinant(&a, self.num_even));
        }
        let b = self.block(0..r, r..size);
        let c = self.block(r..size, 0..r);
        let d = self.block(r..size, r..size);
        let d_inv = invert_even(&d, self.num_even)?;
        let correction = mat_mul(&mat_mul(&b, &d_inv, self.num_even), &c, self.num_even);
        let schur: Block = a
            .iter()
            .zip(&correction)
            .map(|(x, y)| x.iter().zip(y).map(|(u, v)| u - v).collect())
            .collect();
        let num = determinant(&schur, self.num_even);
        let den = determinant(&d, self.num_even);
        Ok(num.mul(&invert_scalar(&den)?))
    }
}

fn scalar(num_even: usize, c: Rational) -> SuperPolynomial {
    SuperPolynomial::from_monomial(Monomial::one(num_even), c)
}

fn mat_mul(x: &Block, y: &Block, num_even: usize) -> Block {
    let rows = x.len();
    let inner = y.len();
    let cols = y.first().map_or(0, Vec::len);
    (0..rows)
        .map(|i| {
            (0..cols)
                .map(|j| {
                    let mut acc = SuperPolynomial::zero_with(num_even);
                    for k in 0..inner {
                        if !x[i][k].is_zero() && !y[k][j].is_zero() {
                            acc += &x[i][k].mul(&y[k][j]);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Split an element into its rational body and the rest.
fn body(e: &SuperPolynomial) -> Result<Rational> {
    let mut c = Rational::zero();
    for (m, v) in e.terms() {
        if m.odd == 0 {
            if !m.is_even_free() || m.hbar != 0 {
                return Err(Error::SingularMatrix);
            }
            c = v.clone();
        }
    }
    Ok(c)
}

/// Inverse of an even element whose body is a nonzero rational.
pub fn invert_scalar(e: &SuperPolynomial) -> Result<SuperPolynomial> {
    let b = body(e)?;
    if b.is_zero() {
        return Err(Error::SingularMatrix);
    }
    let num_even = e.num_even();
    let inv_b = Rational::one() / &b;
    // e = b (1 + x) with x nilpotent
    let mut x = e.scale(&inv_b);
    x.add_term(Monomial::one(num_even), -Rational::one());
    let mut acc = scalar(num_even, Rational::one());
    let mut term = acc.clone();
    let minus_x = -&x;
    loop {
        term = term.mul(&minus_x);
        if term.is_zero() {
            break;
        }
        acc += &term;
    }
    Ok(acc.scale(&inv_b))
}

fn rational_inverse(m: &[Vec<Rational>]) -> Result<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut aug: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !aug[r][col].is_zero())
            .ok_or(Error::SingularMatrix)?;
        aug.swap(col, pivot);
        let inv = Rational::one() / &aug[col][col];
        for v in aug[col].iter_mut() {
            *v *= &inv;
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for k in 0..2 * n {
                    let t = &aug[col][k] * &f;
                    aug[r][k] -= t;
                }
            }
        }
    }
    Ok(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Inverse of a square block of even elements via `D⁻¹ = Σ (−D₀⁻¹N)^k D₀⁻¹`.
fn invert_even(d: &Block, num_even: usize) -> Result<Block> {
    let n = d.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    let bodies: Vec<Vec<Rational>> = d
        .iter()
        .map(|r| r.iter().map(body).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let b_inv = rational_inverse(&bodies)?;
    let b_inv_m: Block = b_inv
        .iter()
        .map(|r| r.iter().map(|c| scalar(num_even, c.clone())).collect())
        .collect();
    let nil: Block = d
        .iter()
        .zip(&bodies)
        .map(|(r, br)| {
            r.iter()
                .zip(br)
                .map(|(e, b)| {
                    let mut x = e.clone();
                    x.add_term(Monomial::one(num_even), -b.clone());
                    x
                })
                .collect()
        })
        .collect();
    let step: Block = mat_mul(&b_inv_m, &nil, num_even)
        .into_iter()
        .map(|r| r.iter().map(|e| -e).collect())
        .collect();
    let mut acc = b_inv_m.clone();
    let mut term = b_inv_m;
    loop {
        term = mat_mul(&step, &term, num_even);
        if term.iter().flatten().all(SuperPolynomial::is_zero) {
            return Ok(acc);
        }
        for (ra, rt) in acc.iter_mut().zip(&term) {
            for (x, y) in ra.iter_mut().zip(rt) {
                *x += y;
            }
        }
    }
}

/// Determinant of a block of pairwise commuting even elements (Laplace expansion).
fn determinant(m: &Block, num_even: usize) -> SuperPolynomial {
    let n = m.len();
    if n == 0 {
        return scalar(num_even, Rational::one());
    }
    let cols: Vec<usize> = (0..n).collect();
    det_rec(m, 0, &cols, num_even)
}

fn det_rec(m: &Block, row: usize, cols: &[usize], num_even: usize) -> SuperPolynomial {
    if cols.len() == 1 {
        return m[row][cols[0]].clone();
    }
    let mut acc = SuperPolynomial::zero_with(num_even);
    for (k, &c) in cols.iter().enumerate() {
        if m[row][c].is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let minor = det_rec(m, row + 1, &rest, num_even);
        let t = m[row][c].mul(&minor);
        if k % 2 == 0 {
            acc += &t;
        } else {
            acc -= &t;
        }
    }
    acc
}

/// Random Grassmann element of the given parity in `gens` generators.
pub fn random_grassmann<R: Rng>(rng: &mut R, gens: usize, parity: Parity, body: Option<Rational>) -> SuperPolynomial {
    let mut out = SuperPolynomial::zero_with(0);
    if let Some(b) = body {
        out.add_term(Monomial::one(0), b);
    }
    for mask in 1u32..(1 << gens) {
        if mask.count_ones() & 1 != parity.bit() || mask.count_ones() > 3 {
            continue;
        }
        if rng.gen_bool(0.5) {
            let mut m = Monomial::one(0);
            m.odd = mask;
            out.add_term(m, rat(rng.gen_range(-3..=3), rng.gen_range(1..=3)));
        }
    }
    out
}

/// Random supermatrix with invertible rational body and nilpotent corrections.
pub fn random_invertible<R: Rng>(rng: &mut R, even_dim: usize, odd_dim: usize, gens: usize) -> SuperMatrix {
    loop {
        let size = even_dim + odd_dim;
        let mut entries = Vec::with_capacity(size);
        for i in 0..size {
            let mut row = Vec::with_capacity(size);
            for j in 0..size {
                let odd = (i >= even_dim) ^ (j >= even_dim);
                let e = if odd {
                    random_grassmann(rng, gens, Parity::Odd, None)
                } else {
                    let b = if i == j { rng.gen_range(1..=3) } else { rng.gen_range(-1..=1) };
                    random_grassmann(rng, gens, Parity::Even, Some(int(b)))
                };
                row.push(e);
            }
            entries.push(row);
        }
        let m = SuperMatrix::new(even_dim, odd_dim, entries).expect("parities are consistent");
        if m.berezinian().is_ok() {
            return m;
        }
    }
}

/// The super-symplectic form `diag(J, h)` on `R^{2m|k}` with `J = [[0, I], [−I, 0]]`.
pub fn symplectic_form(m: usize, h: &[Vec<i64>]) -> SuperMatrix {
    let k = h.len();
    let size = 2 * m + k;
    let mut rows = vec![vec![Rational::zero(); size]; size];
    for i in 0..m {
        rows[i][m + i] = Rational::one();
        rows[m + i][i] = -Rational::one();
    }
    for i in 0..k {
        for j in 0..k {
            rows[2 * m + i][2 * m + j] = int(h[i][j]);
        }
    }
    SuperMatrix::from_rational(2 * m, k, &rows).expect("rational form")
}

/// Random element of the super-symplectic group preserving `diag(J, h)`,
/// built from even shears and exponentials of odd generators.
pub fn random_super_symplectic<R: Rng>(
    rng: &mut R,
    m: usize,
    h: &[Vec<i64>],
    gens: usize,
) -> Result<SuperMatrix> {
    let k = h.len();
    let size = 2 * m + k;
    let zero = || SuperPolynomial::zero_with(0);
    let mut acc = SuperMatrix::identity(2 * m, k, 0);
    for _ in 0..3 {
        // even shear [[I, S], [0, I]] or [[I, 0], [S, I]] with S symmetric
        let mut shear = SuperMatrix::identity(2 * m, k, 0);
        let lower = rng.gen_bool(0.5);
        for i in 0..m {
            for j in i..m {
                let c = int(rng.gen_range(-2..=2));
                let (r, col) = if lower { (m + i, j) } else { (i, m + j) };
                shear.entries[r][col] = scalar(0, c.clone());
                let (r2, col2) = if lower { (m + j, i) } else { (j, m + i) };
                shear.entries[r2][col2] = scalar(0, c);
            }
        }
        acc = acc.mul(&shear)?;
        // odd generator X = [[0, B], [C, 0]] with B = J Cᵗ h
        let c_block: Block = (0..k)
            .map(|_| {
                (0..2 * m)
                    .map(|_| random_grassmann(rng, gens, Parity::Odd, None))
                    .collect()
            })
            .collect();
        let mut x = vec![vec![zero(); size]; size];
        for i in 0..2 * m {
            for j in 0..k {
                // (J Cᵗ h)_{ij} = Σ_{l,t} J_{il} C_{tl} h_{tj}
                let mut e = zero();
                for t in 0..k {
                    if h[t][j] == 0 {
                        continue;
                    }
                    let (l, sign) = if i < m { (m + i, 1) } else { (i - m, -1) };
                    e += &c_block[t][l].scale(&int(sign * h[t][j]));
                }
                x[i][2 * m + j] = e;
            }
        }
        for i in 0..k {
            for j in 0..2 * m {
                x[2 * m + i][j] = c_block[i][j].clone();
            }
        }
        let gen = SuperMatrix {
            even_dim: 2 * m,
            odd_dim: k,
            num_even: 0,
            entries: x,
        };
        acc = acc.mul(&gen.exp_nilpotent()?)?;
    }
    Ok(acc)
}
