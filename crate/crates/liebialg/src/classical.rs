//! The classical series A, B, C, D over the split real forms: root systems,
//! root-space generator matrices, the standard r-matrix, the root-string
//! condition, and the tabulated coisotropic families each admissible root
//! produces.
//!
//! Generator conventions, with `E(i,j)` the matrix unit (1-based):
//! * A_n, sl(n+1): root `L_i - L_j` spanned by `E(i,j)`; Cartan basis
//!   `H_1 - H_{k+1}` with `H_i = E(i,i)`.
//! * B_n, so(n+1,n) in the split quadratic form: `X_ij = E(i,j) - E(n+j,n+i)`
//!   for `L_i - L_j`, `Y_ij = E(i,n+j) - E(j,n+i)` for `L_i + L_j`,
//!   `Z_ij = E(n+i,j) - E(n+j,i)` for `-L_i - L_j`,
//!   `U_i = E(i,2n+1) - E(2n+1,n+i)` for `L_i`,
//!   `V_i = E(n+i,2n+1) - E(2n+1,i)` for `-L_i`,
//!   `H_i = E(i,i) - E(n+i,n+i)`.
//! * C_n, sp(2n): `X_ij` as in B, `Y_ij = E(i,n+j) + E(j,n+i)`,
//!   `Z_ij = E(n+i,j) + E(n+j,i)`, `U_i = E(i,n+i)` for `2L_i`,
//!   `V_i = E(n+i,i)` for `-2L_i`, `H_i` as in B.
//! * D_n, so(n,n): `X`, `Y`, `Z`, `H` by the B formulas.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;


use crate::construction::{construct, ConstructionReport};
use crate::error::Error;
use crate::liealg::LieAlgebra;
use crate::linalg::{unit_vector, zero_vector, Matrix, Vector};
use crate::multivector::Multivector;
use crate::scalar::Scalar;
use crate::subspace::{Ambient, Subspace};

/// The four classical series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
        }
    }

    pub fn min_rank(self) -> usize {
        match self {
            Series::A => 1,
            _ => 2,
        }
    }

    /// Size of the defining matrix representation at the given rank.
    pub fn matrix_size(self, rank: usize) -> usize {
        match self {
            Series::A => rank + 1,
            Series::B => 2 * rank + 1,
            Series::C | Series::D => 2 * rank,
        }
    }

    /// Number of coordinates of a root vector.
    pub fn root_len(self, rank: usize) -> usize {
        match self {
            Series::A => rank + 1,
            _ => rank,
        }
    }

    pub fn dim(self, rank: usize) -> usize {
        let n = rank;
        match self {
            Series::A => (n + 1) * (n + 1) - 1,
            Series::B | Series::C => n * (2 * n + 1),
            Series::D => n * (2 * n - 1),
        }
    }
}

impl FromStr for Series {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "A" | "a" => Ok(Series::A),
            "B" | "b" => Ok(Series::B),
            "C" | "c" => Ok(Series::C),
            "D" | "d" => Ok(Series::D),
            other => Err(Error::invalid_input(
                "series",
                format!("unknown series '{other}', expected one of A, B, C, D"),
            )),
        }
    }
}

/// A root written in the `L_i` coordinates, e.g. `L1-L3` is `(1, 0, -1)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn negated(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    fn translate(&self, k: i64, step: &Root) -> Root {
        Root(
            self.0
                .iter()
                .zip(&step.0)
                .map(|(a, b)| a + k * b)
                .collect(),
        )
    }

    /// Sort key: first supported coordinate, then coordinates descending, so
    /// that e.g. `2L1` precedes `-2L1` and both precede `2L2`.
    fn canonical_key(&self) -> (usize, Vec<i64>) {
        let first = self
            .0
            .iter()
            .position(|&c| c != 0)
            .unwrap_or(self.0.len());
        (first, self.0.iter().map(|c| -c).collect())
    }

    pub fn parse(text: &str, len: usize) -> Result<Root, Error> {
        let bad = |msg: String| Error::invalid_input("root", msg);
        let mut coords = vec![0i64; len];
        let bytes = text.trim().as_bytes();
        if bytes.is_empty() {
            return Err(bad("empty root".into()));
        }
        let mut pos = 0;
        let mut first = true;
        while pos < bytes.len() {
            let sign = match bytes[pos] {
                b'+' => {
                    pos += 1;
                    1
                }
                b'-' => {
                    pos += 1;
                    -1
                }
                _ if first => 1,
                other => {
                    return Err(bad(format!(
                        "expected '+' or '-' before term, found '{}'",
                        other as char
                    )))
                }
            };
            first = false;
            let mut coeff = 0i64;
            let digits_start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                coeff = coeff * 10 + (bytes[pos] - b'0') as i64;
                pos += 1;
            }
            if pos == digits_start {
                coeff = 1;
            }
            if pos >= bytes.len() || bytes[pos] != b'L' {
                return Err(bad("expected 'L' in root term".into()));
            }
            pos += 1;
            let idx_start = pos;
            let mut idx = 0usize;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                idx = idx * 10 + (bytes[pos] - b'0') as usize;
                pos += 1;
            }
            if pos == idx_start || idx == 0 || idx > len {
                return Err(bad(format!("coordinate index out of range 1..={len}")));
            }
            coords[idx - 1] += sign * coeff;
        }
        Ok(Root(coords))
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            let mag = c.abs();
            if mag != 1 {
                write!(f, "{mag}")?;
            }
            write!(f, "L{}", i + 1)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Index bookkeeping for the basis of one classical algebra.
#[derive(Clone, Copy, Debug)]
struct Layout {
    series: Series,
    rank: usize,
}

impl Layout {
    fn pair_rank(&self, i: usize, j: usize) -> usize {
        // 1-based i < j <= rank
        let n = self.rank;
        (i - 1) * n - i * (i - 1) / 2 + (j - i - 1)
    }

    /// `E(i,j)`-type generator, i != j. For A over 1..=n+1, otherwise 1..=n.
    fn x_index(&self, i: usize, j: usize) -> usize {
        let m = match self.series {
            Series::A => self.rank + 1,
            _ => self.rank,
        };
        debug_assert!(i != j && i <= m && j <= m);
        (i - 1) * (m - 1) + (j - 1) - usize::from(j > i)
    }

    fn x_count(&self) -> usize {
        let m = match self.series {
            Series::A => self.rank + 1,
            _ => self.rank,
        };
        m * (m - 1)
    }

    fn y_index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j);
        self.x_count() + self.pair_rank(i, j)
    }

    fn z_index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j);
        let pairs = self.rank * (self.rank - 1) / 2;
        self.x_count() + pairs + self.pair_rank(i, j)
    }

    fn u_index(&self, i: usize) -> usize {
        let pairs = self.rank * (self.rank - 1) / 2;
        self.x_count() + 2 * pairs + (i - 1)
    }

    fn v_index(&self, i: usize) -> usize {
        self.u_index(i) + self.rank
    }

    /// Cartan slot: for A the element `H_1 - H_{k+1}`, otherwise `H_k`.
    fn h_index(&self, k: usize) -> usize {
        match self.series {
            Series::A => self.x_count() + (k - 1),
            Series::B | Series::C => {
                let pairs = self.rank * (self.rank - 1) / 2;
                self.x_count() + 2 * pairs + 2 * self.rank + (k - 1)
            }
            Series::D => {
                let pairs = self.rank * (self.rank - 1) / 2;
                self.x_count() + 2 * pairs + (k - 1)
            }
        }
    }

    fn dim(&self) -> usize {
        self.series.dim(self.rank)
    }
}

fn pair_name(prefix: char, i: usize, j: usize) -> String {
    if i < 10 && j < 10 {
        format!("{prefix}{i}{j}")
    } else {
        format!("{prefix}{i}_{j}")
    }
}

/// Root datum of a classical algebra: the roots, the basis index of each
/// root-space generator, and the Cartan slots.
#[derive(Clone, Debug)]
pub struct RootDatum<S: Scalar> {
    series: Series,
    rank: usize,
    dim: usize,
    layout: Layout,
    /// All roots in canonical order.
    roots: Vec<Root>,
    positives: Vec<Root>,
    root_set: BTreeSet<Vec<i64>>,
    basis_matrices: Vec<Matrix<S>>,
}

impl<S: Scalar> RootDatum<S> {
    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// All roots, ordered canonically (first coordinate, then descending).
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positives
    }

    pub fn is_root(&self, r: &Root) -> bool {
        self.root_set.contains(&r.0)
    }

    pub fn is_positive(&self, r: &Root) -> bool {
        self.positives.contains(r)
    }

    pub fn parse_root(&self, text: &str) -> Result<Root, Error> {
        let root = Root::parse(text, self.series.root_len(self.rank))?;
        if !self.is_root(&root) {
            return Err(Error::UnknownRoot {
                text: text.to_owned(),
                series: self.series.letter(),
                rank: self.rank,
            });
        }
        Ok(root)
    }

    /// Basis index of the generator spanning the root space.
    pub fn generator_index(&self, root: &Root) -> Option<usize> {
        if !self.is_root(root) {
            return None;
        }
        Some(self.generator_index_unchecked(root))
    }

    fn generator_index_unchecked(&self, root: &Root) -> usize {
        let l = &self.layout;
        let coords = &root.0;
        match self.series {
            Series::A => {
                let i = coords.iter().position(|&c| c == 1).unwrap() + 1;
                let j = coords.iter().position(|&c| c == -1).unwrap() + 1;
                l.x_index(i, j)
            }
            _ => {
                let pos: Vec<usize> = coords
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(i, _)| i + 1)
                    .collect();
                if pos.len() == 1 {
                    let i = pos[0];
                    if coords[i - 1] > 0 {
                        l.u_index(i)
                    } else {
                        l.v_index(i)
                    }
                } else {
                    let (i, j) = (pos[0], pos[1]);
                    let (ci, cj) = (coords[i - 1], coords[j - 1]);
                    match (ci > 0, cj > 0) {
                        (true, true) => l.y_index(i, j),
                        (false, false) => l.z_index(i, j),
                        (true, false) => l.x_index(i, j),
                        (false, true) => l.x_index(j, i),
                    }
                }
            }
        }
    }

    pub fn generator_vector(&self, root: &Root) -> Option<Vector<S>> {
        self.generator_index(root)
            .map(|i| unit_vector(self.dim, i))
    }

    pub fn generator_matrix(&self, root: &Root) -> Option<&Matrix<S>> {
        self.generator_index(root).map(|i| &self.basis_matrices[i])
    }

    /// Basis indices of the Cartan slots.
    pub fn cartan_indices(&self) -> Vec<usize> {
        (1..=self.rank).map(|k| self.layout.h_index(k)).collect()
    }

    /// Basis indices of the positive root-space generators.
    pub fn positive_indices(&self) -> Vec<usize> {
        self.positives
            .iter()
            .map(|r| self.generator_index_unchecked(r))
            .collect()
    }

    pub fn negative_indices(&self) -> Vec<usize> {
        self.positives
            .iter()
            .map(|r| self.generator_index_unchecked(&r.negated()))
            .collect()
    }

    /// Coordinates of `H_i - H_j` (diagonal `E(i,i) - E(j,j)` type element).
    pub fn cartan_difference_vector(&self, i: usize, j: usize) -> Result<Vector<S>, Error> {
        if i == j || i == 0 || j == 0 || i > self.rank + 1 || j > self.rank + 1 {
            return Err(Error::invalid_input(
                "cartan",
                format!("bad Cartan pair ({i}, {j})"),
            ));
        }
        let mut v = zero_vector(self.dim);
        match self.series {
            Series::A => {
                // H_a - H_b = (H_1 - H_b) - (H_1 - H_a)
                if j > 1 {
                    v[self.layout.h_index(j - 1)] = S::one();
                }
                if i > 1 {
                    v[self.layout.h_index(i - 1)] = -S::one();
                }
            }
            _ => {
                if i > self.rank || j > self.rank {
                    return Err(Error::invalid_input(
                        "cartan",
                        format!("bad Cartan pair ({i}, {j})"),
                    ));
                }
                v[self.layout.h_index(i)] = S::one();
                v[self.layout.h_index(j)] = -S::one();
            }
        }
        Ok(v)
    }

    /// Coordinates of the Cartan element `H_i` (series B, C, D).
    pub fn cartan_vector(&self, i: usize) -> Result<Vector<S>, Error> {
        if self.series == Series::A || i == 0 || i > self.rank {
            return Err(Error::invalid_input(
                "cartan",
                format!("no single Cartan generator H_{i} in this series"),
            ));
        }
        Ok(unit_vector(self.dim, self.layout.h_index(i)))
    }

    /// Value of a root on a Cartan element given by its coordinates: the
    /// realization matrix of `h` is diagonal and the root reads off its
    /// leading diagonal entries.
    pub fn root_value(&self, root: &Root, h: &[S]) -> S {
        let mut mat = Matrix::zero(
            self.series.matrix_size(self.rank),
            self.series.matrix_size(self.rank),
        );
        for (idx, c) in h.iter().enumerate() {
            if !c.is_zero() {
                mat = mat.add(&self.basis_matrices[idx].scale(c));
            }
        }
        let mut acc = S::zero();
        for (t, &a) in root.0.iter().enumerate() {
            if a != 0 {
                acc = acc + S::from_int(a) * mat[(t, t)].clone();
            }
        }
        acc
    }

    /// Express a matrix of the defining representation in the basis.
    pub fn coordinates(&self, m: &Matrix<S>) -> Option<Vector<S>> {
        coordinates_in_basis(self.series, self.rank, m)
    }

    /// Realization matrix of a coordinate vector.
    pub fn matrix_of(&self, v: &[S]) -> Matrix<S> {
        let size = self.series.matrix_size(self.rank);
        let mut out = Matrix::zero(size, size);
        for (idx, c) in v.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.basis_matrices[idx].scale(c));
            }
        }
        out
    }
}

fn unit_matrix<S: Scalar>(size: usize, entries: &[(usize, usize, i64)]) -> Matrix<S> {
    let mut m = Matrix::zero(size, size);
    for &(i, j, c) in entries {
        m[(i - 1, j - 1)] = S::from_int(c);
    }
    m
}

fn basis_matrix<S: Scalar>(series: Series, rank: usize, index: usize) -> Matrix<S> {
    let l = Layout { series, rank };
    let n = rank;
    let size = series.matrix_size(rank);
    match series {
        Series::A => {
            let m = n + 1;
            if index < l.x_count() {
                for i in 1..=m {
                    for j in 1..=m {
                        if i != j && l.x_index(i, j) == index {
                            return unit_matrix(size, &[(i, j, 1)]);
                        }
                    }
                }
                unreachable!("index below x_count matches a pair")
            }
            let k = index - l.x_count() + 1; // H_1 - H_{k+1}
            unit_matrix(size, &[(1, 1, 1), (k + 1, k + 1, -1)])
        }
        Series::B | Series::C | Series::D => {
            for i in 1..=n {
                for j in 1..=n {
                    if i != j && l.x_index(i, j) == index {
                        return unit_matrix(size, &[(i, j, 1), (n + j, n + i, -1)]);
                    }
                }
            }
            for i in 1..=n {
                for j in (i + 1)..=n {
                    if l.y_index(i, j) == index {
                        let s = if series == Series::C { 1 } else { -1 };
                        return unit_matrix(size, &[(i, n + j, 1), (j, n + i, s)]);
                    }
                    if l.z_index(i, j) == index {
                        let s = if series == Series::C { 1 } else { -1 };
                        return unit_matrix(size, &[(n + i, j, 1), (n + j, i, s)]);
                    }
                }
            }
            if series != Series::D {
                for i in 1..=n {
                    if l.u_index(i) == index {
                        return match series {
                            Series::B => {
                                unit_matrix(size, &[(i, 2 * n + 1, 1), (2 * n + 1, n + i, -1)])
                            }
                            _ => unit_matrix(size, &[(i, n + i, 1)]),
                        };
                    }
                    if l.v_index(i) == index {
                        return match series {
                            Series::B => {
                                unit_matrix(size, &[(n + i, 2 * n + 1, 1), (2 * n + 1, i, -1)])
                            }
                            _ => unit_matrix(size, &[(n + i, i, 1)]),
                        };
                    }
                }
            }
            for k in 1..=n {
                if l.h_index(k) == index {
                    return unit_matrix(size, &[(k, k, 1), (n + k, n + k, -1)]);
                }
            }
            unreachable!("basis index out of range")
        }
    }
}

fn coordinates_in_basis<S: Scalar>(
    series: Series,
    rank: usize,
    m: &Matrix<S>,
) -> Option<Vector<S>> {
    let l = Layout { series, rank };
    let n = rank;
    let size = series.matrix_size(rank);
    if m.rows() != size || m.cols() != size {
        return None;
    }
    let mut coords = zero_vector(l.dim());
    match series {
        Series::A => {
            let mm = n + 1;
            for i in 1..=mm {
                for j in 1..=mm {
                    if i != j {
                        coords[l.x_index(i, j)] = m[(i - 1, j - 1)].clone();
                    }
                }
            }
            for k in 1..=n {
                coords[l.h_index(k)] = -m[(k, k)].clone();
            }
        }
        _ => {
            for i in 1..=n {
                for j in 1..=n {
                    if i != j {
                        coords[l.x_index(i, j)] = m[(i - 1, j - 1)].clone();
                    }
                }
                coords[l.h_index(i)] = m[(i - 1, i - 1)].clone();
            }
            for i in 1..=n {
                for j in (i + 1)..=n {
                    coords[l.y_index(i, j)] = m[(i - 1, n + j - 1)].clone();
                    coords[l.z_index(i, j)] = m[(n + i - 1, j - 1)].clone();
                }
            }
            match series {
                Series::B => {
                    for i in 1..=n {
                        coords[l.u_index(i)] = m[(i - 1, 2 * n)].clone();
                        coords[l.v_index(i)] = m[(n + i - 1, 2 * n)].clone();
                    }
                }
                Series::C => {
                    for i in 1..=n {
                        coords[l.u_index(i)] = m[(i - 1, n + i - 1)].clone();
                        coords[l.v_index(i)] = m[(n + i - 1, i - 1)].clone();
                    }
                }
                _ => {}
            }
        }
    }
    // validate: the candidate coordinates must reproduce the matrix
    let mut rebuilt = Matrix::zero(size, size);
    for (idx, c) in coords.iter().enumerate() {
        if !c.is_zero() {
            rebuilt = rebuilt.add(&basis_matrix::<S>(series, rank, idx).scale(c));
        }
    }
    if &rebuilt == m {
        Some(coords)
    } else {
        None
    }
}

fn basis_name(series: Series, rank: usize, index: usize) -> String {
    let l = Layout { series, rank };
    let n = rank;
    match series {
        Series::A => {
            let m = n + 1;
            for i in 1..=m {
                for j in 1..=m {
                    if i != j && l.x_index(i, j) == index {
                        return pair_name('E', i, j);
                    }
                }
            }
            let k = index - l.x_count() + 1;
            format!("H1-H{}", k + 1)
        }
        _ => {
            for i in 1..=n {
                for j in 1..=n {
                    if i != j && l.x_index(i, j) == index {
                        return pair_name('X', i, j);
                    }
                }
            }
            for i in 1..=n {
                for j in (i + 1)..=n {
                    if l.y_index(i, j) == index {
                        return pair_name('Y', i, j);
                    }
                    if l.z_index(i, j) == index {
                        return pair_name('Z', i, j);
                    }
                }
            }
            if series != Series::D {
                for i in 1..=n {
                    if l.u_index(i) == index {
                        return format!("U{i}");
                    }
                    if l.v_index(i) == index {
                        return format!("V{i}");
                    }
                }
            }
            for k in 1..=n {
                if l.h_index(k) == index {
                    return format!("H{k}");
                }
            }
            unreachable!("basis index out of range")
        }
    }
}

fn all_roots(series: Series, rank: usize) -> (Vec<Root>, Vec<Root>) {
    let n = rank;
    let len = series.root_len(rank);
    let mut positives = Vec::new();
    let mut roots = Vec::new();
    let mut push = |coords: Vec<i64>, positive: bool| {
        let root = Root(coords);
        if positive {
            positives.push(root.clone());
        }
        roots.push(root);
    };
    match series {
        Series::A => {
            let m = n + 1;
            for i in 1..=m {
                for j in 1..=m {
                    if i == j {
                        continue;
                    }
                    let mut c = vec![0i64; len];
                    c[i - 1] = 1;
                    c[j - 1] = -1;
                    push(c, i < j);
                }
            }
        }
        Series::B | Series::C | Series::D => {
            for i in 1..=n {
                for j in (i + 1)..=n {
                    for (ci, cj, positive) in
                        [(1, -1, true), (-1, 1, false), (1, 1, true), (-1, -1, false)]
                    {
                        let mut c = vec![0i64; len];
                        c[i - 1] = ci;
                        c[j - 1] = cj;
                        push(c, positive);
                    }
                }
            }
            if series != Series::D {
                let short = if series == Series::C { 2 } else { 1 };
                for i in 1..=n {
                    let mut c = vec![0i64; len];
                    c[i - 1] = short;
                    push(c.clone(), true);
                    c[i - 1] = -short;
                    push(c, false);
                }
            }
        }
    }
    roots.sort_by_key(|r| r.canonical_key());
    (roots, positives)
}

/// Build the split form of a classical algebra together with its root datum.
/// The realization is attached and the structure constants are derived from
/// the matrix commutators.
pub fn build_series<S: Scalar>(
    series: Series,
    rank: usize,
) -> Result<(LieAlgebra<S>, RootDatum<S>), Error> {
    if rank < series.min_rank() {
        return Err(Error::RankOutOfRange {
            series: series.letter(),
            rank,
            min: series.min_rank(),
        });
    }
    let layout = Layout { series, rank };
    let dim = layout.dim();
    let matrices: Vec<Matrix<S>> = (0..dim)
        .map(|idx| basis_matrix(series, rank, idx))
        .collect();
    let names: Vec<String> = (0..dim).map(|idx| basis_name(series, rank, idx)).collect();
    let alg = LieAlgebra::from_matrices(names, matrices.clone(), |m| {
        coordinates_in_basis(series, rank, m)
    })?;
    let (roots, positives) = all_roots(series, rank);
    let root_set = roots.iter().map(|r| r.0.clone()).collect();
    let datum = RootDatum {
        series,
        rank,
        dim,
        layout,
        roots,
        positives,
        root_set,
        basis_matrices: matrices,
    };
    Ok((alg, datum))
}

/// The r-matrix `sum_{a in R+} e_a ^ f_a / B(e_a, f_a)` with `B` the Killing
/// form.
pub fn standard_r_matrix<S: Scalar>(
    alg: &LieAlgebra<S>,
    rd: &RootDatum<S>,
) -> Result<Multivector<S>, Error> {
    let dim = alg.dim();
    let mut terms = Vec::new();
    for alpha in rd.positive_roots() {
        let e = rd
            .generator_index(alpha)
            .expect("positive roots have generators");
        let f = rd
            .generator_index(&alpha.negated())
            .expect("negative roots have generators");
        let b = alg.killing_form(&unit_vector(dim, e), &unit_vector(dim, f))?;
        let lambda = b.inverse().ok_or_else(|| Error::DegenerateRootPairing {
            root: alpha.to_string(),
        })?;
        // e ^ f = -(f ^ e): store with increasing indices
        if e < f {
            terms.push((vec![e, f], lambda));
        } else {
            terms.push((vec![f, e], -lambda));
        }
    }
    Multivector::from_terms(dim, 2, terms)
}

/// Root-string condition: for every root `a`, the set
/// `{k : a + k b is a root}` contains no three consecutive integers.
pub fn satisfies_string_condition<S: Scalar>(
    rd: &RootDatum<S>,
    beta: &Root,
) -> Result<bool, Error> {
    if !rd.is_root(beta) {
        return Err(Error::UnknownRoot {
            text: beta.to_string(),
            series: rd.series().letter(),
            rank: rd.rank(),
        });
    }
    for alpha in rd.roots() {
        let member: Vec<bool> = (-5..=5)
            .map(|k| rd.is_root(&alpha.translate(k, beta)))
            .collect();
        if member.windows(3).any(|w| w[0] && w[1] && w[2]) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Roots passing the string condition, in canonical order.
pub fn admissible_roots<S: Scalar>(rd: &RootDatum<S>) -> Result<Vec<Root>, Error> {
    rd.roots()
        .iter()
        .filter_map(|r| match satisfies_string_condition(rd, r) {
            Ok(true) => Some(Ok(r.clone())),
            Ok(false) => None,
            Err(e) => Some(Err(e)),
        })
        .collect()
}

/// The three wedge-vanishing conditions on `X` that force the scaling
/// condition with `lambda = 0`:
/// for every positive root `a`,
/// 1) `[X,[X,e_a]] ^ f_a = 0`, 2) `[X,[X,f_a]] ^ e_a = 0`,
/// 3) `[X,e_a] ^ [X,f_a] = 0`.
/// Returns the first failing `(root, condition)`.
pub fn vanishing_conditions<S: Scalar>(
    alg: &LieAlgebra<S>,
    rd: &RootDatum<S>,
    x: &[S],
) -> Result<Option<(Root, u8)>, Error> {
    let wedge_vanishes = |a: &[S], b: &[S]| -> Result<bool, Error> {
        Ok(Multivector::from_vector(a)
            .wedge(&Multivector::from_vector(b))?
            .is_zero())
    };
    for alpha in rd.positive_roots() {
        let e = rd.generator_vector(alpha).expect("generator exists");
        let f = rd
            .generator_vector(&alpha.negated())
            .expect("generator exists");
        let xe = alg.bracket(x, &e)?;
        let xf = alg.bracket(x, &f)?;
        let xxe = alg.bracket(x, &xe)?;
        let xxf = alg.bracket(x, &xf)?;
        if !wedge_vanishes(&xxe, &f)? {
            return Ok(Some((alpha.clone(), 1)));
        }
        if !wedge_vanishes(&xxf, &e)? {
            return Ok(Some((alpha.clone(), 2)));
        }
        if !wedge_vanishes(&xe, &xf)? {
            return Ok(Some((alpha.clone(), 3)));
        }
    }
    Ok(None)
}

/// The tabulated coisotropic family attached to an admissible root: golden
/// data written straight from the generator lists, independent of the
/// construction pipeline.
pub fn standard_family<S: Scalar>(
    series: Series,
    rank: usize,
    root: &Root,
) -> Result<Subspace<S>, Error> {
    let layout = Layout { series, rank };
    let (roots, _) = all_roots(series, rank);
    let root_set: BTreeSet<Vec<i64>> = roots.iter().map(|r| r.0.clone()).collect();
    if !root_set.contains(&root.0) {
        return Err(Error::UnknownRoot {
            text: root.to_string(),
            series: series.letter(),
            rank,
        });
    }
    let dim = layout.dim();
    let n = rank;
    let mut rows: Vec<Vector<S>> = Vec::new();
    let unit = |idx: usize, rows: &mut Vec<Vector<S>>| {
        rows.push(unit_vector(dim, idx));
    };
    let cartan_diff = |i: usize, j: usize| -> Vector<S> {
        let mut v = zero_vector(dim);
        match series {
            Series::A => {
                if j > 1 {
                    v[layout.h_index(j - 1)] = S::one();
                }
                if i > 1 {
                    v[layout.h_index(i - 1)] = -S::one();
                }
            }
            _ => {
                v[layout.h_index(i)] = S::one();
                v[layout.h_index(j)] = -S::one();
            }
        }
        v
    };

    let coords = &root.0;
    let support: Vec<usize> = coords
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, _)| i + 1)
        .collect();

    match series {
        Series::A => {
            let s = coords.iter().position(|&c| c == 1).unwrap() + 1;
            let t = coords.iter().position(|&c| c == -1).unwrap() + 1;
            rows.push(cartan_diff(s, t));
            unit(layout.x_index(s, t), &mut rows);
            for k in (s.min(t) + 1)..s.max(t) {
                unit(layout.x_index(k, t), &mut rows);
                unit(layout.x_index(s, k), &mut rows);
            }
        }
        Series::C => {
            if support.len() != 1 {
                return Err(Error::StringConditionViolated {
                    root: root.to_string(),
                });
            }
            let i = support[0];
            rows.push(unit_vector(dim, layout.h_index(i)));
            if coords[i - 1] > 0 {
                unit(layout.u_index(i), &mut rows);
                for k in (i + 1)..=n {
                    unit(layout.y_index(i, k), &mut rows);
                    unit(layout.x_index(i, k), &mut rows);
                }
            } else {
                unit(layout.v_index(i), &mut rows);
                for k in (i + 1)..=n {
                    unit(layout.z_index(i, k), &mut rows);
                    unit(layout.x_index(k, i), &mut rows);
                }
            }
        }
        Series::B | Series::D => {
            if support.len() != 2 {
                return Err(Error::StringConditionViolated {
                    root: root.to_string(),
                });
            }
            let (i, j) = (support[0], support[1]);
            let (ci, cj) = (coords[i - 1], coords[j - 1]);
            if ci * cj > 0 {
                // the Cartan direction is the coroot of L_i + L_j
                let mut v = zero_vector(dim);
                v[layout.h_index(i)] = S::one();
                v[layout.h_index(j)] = S::one();
                rows.push(v);
            } else {
                rows.push(cartan_diff(i, j));
            }
            match (ci > 0, cj > 0) {
                (true, false) | (false, true) => {
                    // L_s - L_t with s the positive slot
                    let (s, t) = if ci > 0 { (i, j) } else { (j, i) };
                    unit(layout.x_index(s, t), &mut rows);
                    for k in (i + 1)..j {
                        unit(layout.x_index(k, t), &mut rows);
                        unit(layout.x_index(s, k), &mut rows);
                    }
                }
                (true, true) => {
                    unit(layout.y_index(i, j), &mut rows);
                    for k in (i + 1)..=n {
                        if k == j {
                            continue;
                        }
                        unit(layout.x_index(i, k), &mut rows);
                        unit(layout.y_index(k.min(j), k.max(j)), &mut rows);
                    }
                    for k in (j + 1)..=n {
                        unit(layout.x_index(j, k), &mut rows);
                        unit(layout.y_index(i, k), &mut rows);
                    }
                    if series == Series::B {
                        unit(layout.u_index(i), &mut rows);
                        unit(layout.u_index(j), &mut rows);
                    }
                }
                (false, false) => {
                    unit(layout.z_index(i, j), &mut rows);
                    for k in (i + 1)..=n {
                        if k == j {
                            continue;
                        }
                        unit(layout.x_index(k, i), &mut rows);
                        unit(layout.z_index(k.min(j), k.max(j)), &mut rows);
                    }
                    for k in (j + 1)..=n {
                        unit(layout.x_index(k, j), &mut rows);
                        unit(layout.z_index(i, k), &mut rows);
                    }
                    if series == Series::B {
                        unit(layout.v_index(i), &mut rows);
                        unit(layout.v_index(j), &mut rows);
                    }
                }
            }
        }
    }
    Ok(Subspace::from_spanning(Ambient::Algebra, dim, rows))
}

/// One verified row of the family reproduction.
#[derive(Debug)]
pub struct FamilyRow<S: Scalar> {
    pub root: Root,
    pub report: ConstructionReport<S>,
    pub expected: Subspace<S>,
    pub matched: bool,
}

/// For every admissible root, run the construction on its generator and
/// compare the result (by canonical basis) with the tabulated family.
pub fn reproduce_families<S: Scalar>(
    series: Series,
    rank: usize,
) -> Result<Vec<FamilyRow<S>>, Error> {
    let (alg, rd) = build_series::<S>(series, rank)?;
    let pi = standard_r_matrix(&alg, &rd)?;
    if let Some(i) = crate::bialgebra::r_matrix_witness(&alg, &pi)? {
        return Err(Error::OracleContradiction(format!(
            "standard bivector is not an r-matrix (witness basis index {i})"
        )));
    }
    let mut out = Vec::new();
    for root in admissible_roots(&rd)? {
        let x = rd.generator_vector(&root).expect("admissible root");
        let report = construct(&alg, &pi, &x)?;
        let expected = standard_family::<S>(series, rank, &root)?;
        let matched = report.subspace == expected;
        out.push(FamilyRow {
            root,
            report,
            expected,
            matched,
        });
    }
    Ok(out)
}
