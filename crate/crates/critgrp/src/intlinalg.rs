//! Arbitrary-precision integer matrices, Smith normal form with unimodular
//! transforms, and cokernel structure extraction.
//!
//! The Smith normal form computed here is fully exact: `P·A·Q = S` with
//! `det P = ±1`, `det Q = ±1`, `S` diagonal with `s_i | s_{i+1}` and all
//! `s_i ≥ 0`, zeros last. Pivots are chosen as the nonzero entry of minimal
//! absolute value in the working submatrix (ties broken by lowest row, then
//! column), and elimination uses extended-gcd Bezout transformations rather
//! than repeated subtraction, which keeps the step count polynomial.
//!
//! The cokernel of `A` is taken of the map on column vectors:
//! `coker(A) = ℤ^rows / im(A)`, whose structure is read off the SNF diagonal.

use std::fmt;

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinAlgError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Dense row-major matrix of arbitrary-precision integers.
///
/// Empty shapes (0 rows or 0 columns) are permitted; the reduced
/// McKay-Cartan matrix of the trivial group is 0×0.
#[derive(Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar_identity(n, BigInt::one())
    }

    /// `c · I` of size `n`.
    pub fn scalar_identity(n: usize, c: BigInt) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|row| row.len() == c),
            "ragged row lengths"
        );
        IntegerMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, LinAlgError> {
        if self.cols != rhs.rows {
            return Err(LinAlgError::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let prod = a * &rhs[(k, c)];
                    out[(r, c)] += prod;
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, LinAlgError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(LinAlgError::ShapeMismatch(format!(
                "cannot subtract {}x{} from {}x{}",
                rhs.rows, rhs.cols, self.rows, self.cols
            )));
        }
        let mut out = self.clone();
        for (x, y) in out.entries.iter_mut().zip(&rhs.entries) {
            *x -= y;
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, LinAlgError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(LinAlgError::ShapeMismatch(format!(
                "cannot add {}x{} to {}x{}",
                rhs.rows, rhs.cols, self.rows, self.cols
            )));
        }
        let mut out = self.clone();
        for (x, y) in out.entries.iter_mut().zip(&rhs.entries) {
            *x += y;
        }
        Ok(out)
    }

    /// The matrix with row `i` and column `j` deleted.
    pub fn delete_row_col(&self, i: usize, j: usize) -> Self {
        assert!(i < self.rows && j < self.cols);
        let mut out = Self::zeros(self.rows - 1, self.cols - 1);
        for r in 0..self.rows - 1 {
            for c in 0..self.cols - 1 {
                let sr = if r < i { r } else { r + 1 };
                let sc = if c < j { c } else { c + 1 };
                out[(r, c)] = self[(sr, sc)].clone();
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -std::mem::take(&mut self[(r, c)]);
            self[(r, c)] = v;
        }
    }

    /// Row `dst` += `k` · row `src`.
    fn add_row_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        for c in 0..self.cols {
            let delta = k * &self[(src, c)];
            self[(dst, c)] += delta;
        }
    }

    /// Column `dst` += `k` · column `src`.
    fn add_col_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        for r in 0..self.rows {
            let delta = k * &self[(r, src)];
            self[(r, dst)] += delta;
        }
    }

    /// Replace rows `(i, j)` by `(a·row_i + b·row_j, c·row_i + d·row_j)`.
    fn transform_rows(&mut self, i: usize, j: usize, a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) {
        for col in 0..self.cols {
            let x = self[(i, col)].clone();
            let y = self[(j, col)].clone();
            self[(i, col)] = a * &x + b * &y;
            self[(j, col)] = c * &x + d * &y;
        }
    }

    /// Replace columns `(i, j)` by `(a·col_i + b·col_j, c·col_i + d·col_j)`.
    fn transform_cols(&mut self, i: usize, j: usize, a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) {
        for row in 0..self.rows {
            let x = self[(row, i)].clone();
            let y = self[(row, j)].clone();
            self[(row, i)] = a * &x + b * &y;
            self[(row, j)] = c * &x + d * &y;
        }
    }

    /// Parse the plain-text format: first line `rows cols`, then `rows`
    /// lines of `cols` space-separated integers.
    pub fn parse_text(text: &str) -> Result<Self, LinAlgError> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (ln, header) = lines.next().ok_or(LinAlgError::Parse {
            line: 1,
            message: "empty input".into(),
        })?;
        let dims: Vec<&str> = header.split_whitespace().collect();
        if dims.len() != 2 {
            return Err(LinAlgError::Parse {
                line: ln + 1,
                message: "expected `rows cols` header".into(),
            });
        }
        let parse_dim = |s: &str, line: usize| {
            s.parse::<usize>().map_err(|_| LinAlgError::Parse {
                line,
                message: format!("bad dimension `{s}`"),
            })
        };
        let rows = parse_dim(dims[0], ln + 1)?;
        let cols = parse_dim(dims[1], ln + 1)?;
        let mut out = Self::zeros(rows, cols);
        for r in 0..rows {
            let (ln, line) = lines.next().ok_or(LinAlgError::Parse {
                line: r + 2,
                message: format!("expected {rows} matrix rows"),
            })?;
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() != cols {
                return Err(LinAlgError::Parse {
                    line: ln + 1,
                    message: format!("expected {cols} entries, found {}", toks.len()),
                });
            }
            for (c, tok) in toks.iter().enumerate() {
                out[(r, c)] = tok.parse::<BigInt>().map_err(|_| LinAlgError::Parse {
                    line: ln + 1,
                    message: format!("bad integer `{tok}`"),
                })?;
            }
        }
        Ok(out)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.rows, self.cols);
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self[(r, c)].to_string()).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }
}

impl std::ops::Index<(usize, usize)> for IntegerMatrix {
    type Output = BigInt;
    fn index(&self, (r, c): (usize, usize)) -> &BigInt {
        debug_assert!(r < self.rows && c < self.cols);
        &self.entries[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntegerMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut BigInt {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.entries[r * self.cols + c]
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntegerMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self[(r, c)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// Unimodular factorization `P·A·Q = S` with `S` in Smith normal form.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub p: IntegerMatrix,
    pub s: IntegerMatrix,
    pub q: IntegerMatrix,
    /// Diagonal entries `s_1, ..., s_min(rows, cols)`, each nonnegative,
    /// with `s_i | s_{i+1}` and zeros last.
    pub diagonal: Vec<BigInt>,
}

impl SmithDecomposition {
    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }
}

/// Index of the nonzero entry of minimal absolute value in the submatrix
/// starting at `(t, t)`; ties break toward the lowest row, then column.
fn find_pivot(m: &IntegerMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(BigInt, usize, usize)> = None;
    for r in t..m.rows() {
        for c in t..m.cols() {
            let v = &m[(r, c)];
            if v.is_zero() {
                continue;
            }
            let a = v.abs();
            match &best {
                Some((b, _, _)) if *b <= a => {}
                _ => best = Some((a, r, c)),
            }
        }
    }
    best.map(|(_, r, c)| (r, c))
}

/// Smith normal form of `A` with unimodular transforms.
///
/// Deterministic for a fixed input. Any shape and rank is accepted.
pub fn snf(a: &IntegerMatrix) -> SmithDecomposition {
    let mut s = a.clone();
    let mut p = IntegerMatrix::identity(a.rows());
    let mut q = IntegerMatrix::identity(a.cols());
    let n = a.rows().min(a.cols());

    for t in 0..n {
        let Some((pr, pc)) = find_pivot(&s, t) else {
            break;
        };
        s.swap_rows(t, pr);
        p.swap_rows(t, pr);
        s.swap_cols(t, pc);
        q.swap_cols(t, pc);

        'work: loop {
            // Clear column t. A plain shear suffices when the pivot divides
            // the entry (and leaves row t untouched); otherwise a Bezout
            // transform replaces the pivot by the gcd.
            for r in t + 1..s.rows() {
                if s[(r, t)].is_zero() {
                    continue;
                }
                let x = s[(t, t)].clone();
                let y = s[(r, t)].clone();
                if y.is_multiple_of(&x) {
                    let k = -(&y / &x);
                    s.add_row_multiple(r, t, &k);
                    p.add_row_multiple(r, t, &k);
                } else {
                    let eg = x.extended_gcd(&y);
                    let (g, u, v) = (eg.gcd, eg.x, eg.y);
                    let xp = &x / &g;
                    let yp = &y / &g;
                    s.transform_rows(t, r, &u, &v, &(-&yp), &xp);
                    p.transform_rows(t, r, &u, &v, &(-&yp), &xp);
                }
            }
            // Clear row t with the matching column transforms.
            for c in t + 1..s.cols() {
                if s[(t, c)].is_zero() {
                    continue;
                }
                let x = s[(t, t)].clone();
                let y = s[(t, c)].clone();
                if y.is_multiple_of(&x) {
                    let k = -(&y / &x);
                    s.add_col_multiple(c, t, &k);
                    q.add_col_multiple(c, t, &k);
                } else {
                    let eg = x.extended_gcd(&y);
                    let (g, u, v) = (eg.gcd, eg.x, eg.y);
                    let xp = &x / &g;
                    let yp = &y / &g;
                    s.transform_cols(t, c, &u, &v, &(-&yp), &xp);
                    q.transform_cols(t, c, &u, &v, &(-&yp), &xp);
                }
            }
            // Column ops can reintroduce entries in column t.
            if (t + 1..s.rows()).any(|r| !s[(r, t)].is_zero()) {
                continue 'work;
            }
            // Divisibility sweep: the pivot must divide every remaining
            // entry; if not, fold the offending row in and keep reducing.
            for r in t + 1..s.rows() {
                for c in t + 1..s.cols() {
                    if !s[(r, c)].is_multiple_of(&s[(t, t)]) {
                        let one = BigInt::one();
                        s.add_row_multiple(t, r, &one);
                        p.add_row_multiple(t, r, &one);
                        continue 'work;
                    }
                }
            }
            break;
        }

        if s[(t, t)].is_negative() {
            s.negate_row(t);
            p.negate_row(t);
        }
    }

    let diagonal: Vec<BigInt> = (0..n).map(|i| s[(i, i)].clone()).collect();
    SmithDecomposition { p, s, q, diagonal }
}

/// A finite abelian group in invariant-factor form `ℤ/d₁ ⊕ ℤ/d₂ ⊕ …` with
/// `d_i | d_{i+1}` and every `d_i ≥ 2`. The empty list is the trivial group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianGroupStructure {
    invariant_factors: Vec<BigInt>,
    order: BigInt,
}

impl AbelianGroupStructure {
    /// Build from a divisibility chain, dropping factors equal to 1.
    pub fn from_invariant_factors(factors: Vec<BigInt>) -> Self {
        let factors: Vec<BigInt> = factors.into_iter().filter(|d| !d.is_one()).collect();
        for w in factors.windows(2) {
            assert!(
                w[1].is_multiple_of(&w[0]),
                "invariant factors must form a divisibility chain"
            );
        }
        assert!(
            factors.iter().all(|d| *d >= BigInt::from(2)),
            "invariant factors must be at least 2"
        );
        let order = factors.iter().product();
        AbelianGroupStructure {
            invariant_factors: factors,
            order,
        }
    }

    pub fn trivial() -> Self {
        Self::from_invariant_factors(Vec::new())
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn order(&self) -> &BigInt {
        &self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }
}

impl fmt::Display for AbelianGroupStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .invariant_factors
            .iter()
            .map(|d| format!("ℤ/{d}"))
            .collect();
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

/// Cokernel of the map `A: ℤ^cols → ℤ^rows` on column vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cokernel {
    pub free_rank: usize,
    pub torsion: AbelianGroupStructure,
}

/// Structure of `ℤ^rows / im(A)`: free rank is the count of zero diagonal
/// entries plus the row deficit, torsion the invariant factors above 1.
pub fn cokernel(a: &IntegerMatrix) -> Cokernel {
    let dec = snf(a);
    let zeros = dec.diagonal.iter().filter(|d| d.is_zero()).count();
    let deficit = a.rows().saturating_sub(a.rows().min(a.cols()));
    let torsion = AbelianGroupStructure::from_invariant_factors(
        dec.diagonal.iter().filter(|d| !d.is_zero()).cloned().collect(),
    );
    Cokernel {
        free_rank: zeros + deficit,
        torsion,
    }
}

/// Whether `(ℤ/dℤ)^k` embeds into `target`.
///
/// Criterion: for every prime power `p^a` exactly dividing `d`, at least `k`
/// invariant factors of the target are divisible by `p^a`.
pub fn subgroup_embeds(d: &BigInt, k: usize, target: &AbelianGroupStructure) -> bool {
    assert!(*d >= BigInt::from(2), "subgroup_embeds requires d ≥ 2");
    if k == 0 {
        return true;
    }
    let mut rest = d.clone();
    let mut p = BigInt::from(2);
    while &p * &p <= rest {
        if rest.is_multiple_of(&p) {
            let mut pa = BigInt::one();
            while rest.is_multiple_of(&p) {
                rest /= &p;
                pa *= &p;
            }
            let count = target
                .invariant_factors()
                .iter()
                .filter(|f| f.is_multiple_of(&pa))
                .count();
            if count < k {
                return false;
            }
        }
        p += 1;
    }
    if rest > BigInt::one() {
        let count = target
            .invariant_factors()
            .iter()
            .filter(|f| f.is_multiple_of(&rest))
            .count();
        if count < k {
            return false;
        }
    }
    true
}
