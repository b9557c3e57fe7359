use crate::error::{QFormError, Result};
use crate::theta;

/// A classically integral positive definite quadratic form, stored as its
/// symmetric Gram matrix `A` with integer entries (so all cross terms of
/// `Q(x) = x^t A x` are even). The zero-dimensional form is allowed: it is
/// the root of every escalation tree and represents only 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadForm {
    dim: usize,
    gram: Vec<i64>,
}

impl QuadForm {
    /// The trivial (zero-dimensional) lattice.
    pub fn trivial() -> Self {
        QuadForm {
            dim: 0,
            gram: Vec::new(),
        }
    }

    pub fn from_gram(rows: &[Vec<i64>]) -> Result<Self> {
        let dim = rows.len();
        let mut gram = Vec::with_capacity(dim * dim);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != dim {
                return Err(QFormError::NotSquare {
                    row: i,
                    len: row.len(),
                    dim,
                });
            }
            gram.extend_from_slice(row);
        }
        Self::from_flat(dim, gram)
    }

    pub fn from_flat(dim: usize, gram: Vec<i64>) -> Result<Self> {
        if gram.len() != dim * dim {
            return Err(QFormError::Invalid(format!(
                "flat gram has {} entries, expected {}",
                gram.len(),
                dim * dim
            )));
        }
        for i in 0..dim {
            for j in (i + 1)..dim {
                if gram[i * dim + j] != gram[j * dim + i] {
                    return Err(QFormError::NotSymmetric);
                }
            }
        }
        let form = QuadForm { dim, gram };
        form.check_positive_definite()?;
        Ok(form)
    }

    pub fn diagonal(entries: &[i64]) -> Result<Self> {
        let dim = entries.len();
        let mut gram = vec![0i64; dim * dim];
        for (i, &d) in entries.iter().enumerate() {
            gram[i * dim + i] = d;
        }
        Self::from_flat(dim, gram)
    }

    fn check_positive_definite(&self) -> Result<()> {
        for k in 1..=self.dim {
            let minor = det_bareiss(&self.submatrix(k), k);
            if minor <= 0 {
                return Err(QFormError::NotPositiveDefinite {
                    index: k,
                    value: minor,
                });
            }
        }
        Ok(())
    }

    fn submatrix(&self, k: usize) -> Vec<i128> {
        let mut m = Vec::with_capacity(k * k);
        for i in 0..k {
            for j in 0..k {
                m.push(self.gram[i * self.dim + j] as i128);
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.gram[i * self.dim + j]
    }

    pub fn gram(&self) -> &[i64] {
        &self.gram
    }

    pub fn gram_rows(&self) -> Vec<Vec<i64>> {
        (0..self.dim)
            .map(|i| self.gram[i * self.dim..(i + 1) * self.dim].to_vec())
            .collect()
    }

    pub fn max_diagonal(&self) -> i64 {
        (0..self.dim).map(|i| self.entry(i, i)).max().unwrap_or(0)
    }

    /// `Q(x) = x^t A x`. Always nonnegative; zero exactly at x = 0.
    pub fn evaluate(&self, x: &[i64]) -> Result<u64> {
        if x.len() != self.dim {
            return Err(QFormError::DimensionMismatch {
                dim: self.dim,
                len: x.len(),
            });
        }
        let v = self.evaluate_i128(x);
        u64::try_from(v).map_err(|_| QFormError::Overflow("evaluate"))
    }

    /// Unchecked-length exact evaluation in i128.
    pub fn evaluate_i128(&self, x: &[i64]) -> i128 {
        let n = self.dim;
        let mut total: i128 = 0;
        for i in 0..n {
            let mut row: i128 = 0;
            for j in 0..n {
                row += self.gram[i * n + j] as i128 * x[j] as i128;
            }
            total += row * x[i] as i128;
        }
        total
    }

    /// Exact determinant of the Gram matrix (positive for valid forms;
    /// 1 for the trivial form by the empty-product convention).
    pub fn determinant(&self) -> i128 {
        det_bareiss(&self.submatrix(self.dim), self.dim)
    }

    /// Adjugate matrix of A (so `A · adj(A) = det(A) · I`), row-major.
    pub fn adjugate(&self) -> Vec<i128> {
        let n = self.dim;
        let a = self.submatrix(n);
        let mut adj = vec![0i128; n * n];
        if n == 0 {
            return adj;
        }
        if n == 1 {
            adj[0] = 1;
            return adj;
        }
        for i in 0..n {
            for j in 0..n {
                // cofactor C_ji for adj_ij
                let mut minor = Vec::with_capacity((n - 1) * (n - 1));
                for r in 0..n {
                    if r == j {
                        continue;
                    }
                    for c in 0..n {
                        if c == i {
                            continue;
                        }
                        minor.push(a[r * n + c]);
                    }
                }
                let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                adj[i * n + j] = sign * det_bareiss(&minor, n - 1);
            }
        }
        adj
    }

    /// Level: smallest N ≥ 1 such that N·(2A)^{-1} is integral with even
    /// diagonal. Computed from the exact adjugate of 2A.
    pub fn level(&self) -> Result<u64> {
        let n = self.dim;
        if n == 0 {
            return Ok(1);
        }
        let det2 = self
            .determinant()
            .checked_mul(1i128 << n)
            .ok_or(QFormError::Overflow("level"))?;
        // adj(2A) = 2^{n-1} · adj(A)
        let adj = self.adjugate();
        let mut level: i128 = 1;
        for i in 0..n {
            for j in 0..n {
                let entry = adj[i * n + j]
                    .checked_mul(1i128 << (n - 1))
                    .ok_or(QFormError::Overflow("level"))?;
                let modulus = if i == j { 2 * det2 } else { det2 };
                let g = gcd_i128(entry, modulus);
                let need = modulus / g;
                level = lcm_i128(level, need).ok_or(QFormError::Overflow("level"))?;
            }
        }
        u64::try_from(level.abs()).map_err(|_| QFormError::Overflow("level"))
    }

    /// χ_Q(p) = Kronecker symbol (D|p) for primes p not dividing 2N.
    pub fn character(&self, p: u64) -> Result<i32> {
        let two_n = 2 * self.level()?;
        if p == 0 || two_n % p == 0 {
            return Err(QFormError::CharacterUndefined { p, two_n });
        }
        Ok(kronecker(self.determinant(), p as i128))
    }

    pub fn leading_principal(&self, k: usize) -> QuadForm {
        assert!(k <= self.dim);
        let mut gram = Vec::with_capacity(k * k);
        for i in 0..k {
            for j in 0..k {
                gram.push(self.entry(i, j));
            }
        }
        QuadForm { dim: k, gram }
    }

    /// Extend by one variable: new Gram has `self` as its leading principal
    /// block, border entries `b`, and corner `t`. Errors if the result is
    /// not positive definite.
    pub fn try_extend(&self, border: &[i64], corner: i64) -> Result<QuadForm> {
        if border.len() != self.dim {
            return Err(QFormError::DimensionMismatch {
                dim: self.dim,
                len: border.len(),
            });
        }
        let n = self.dim + 1;
        let mut gram = vec![0i64; n * n];
        for i in 0..self.dim {
            for j in 0..self.dim {
                gram[i * n + j] = self.entry(i, j);
            }
        }
        for i in 0..self.dim {
            gram[i * n + (n - 1)] = border[i];
            gram[(n - 1) * n + i] = border[i];
        }
        gram[n * n - 1] = corner;
        Self::from_flat(n, gram)
    }

    /// Apply a basis change: returns the Gram of `U A U^t` where the rows of
    /// `u` are the new basis vectors in the old coordinates.
    pub fn transform(&self, u: &[Vec<i64>]) -> Result<QuadForm> {
        let n = self.dim;
        let k = u.len();
        let mut gram = vec![0i64; k * k];
        for i in 0..k {
            if u[i].len() != n {
                return Err(QFormError::DimensionMismatch {
                    dim: n,
                    len: u[i].len(),
                });
            }
        }
        for i in 0..k {
            // s = A · u_i
            let mut s = vec![0i128; n];
            for r in 0..n {
                let mut acc = 0i128;
                for c in 0..n {
                    acc += self.gram[r * n + c] as i128 * u[i][c] as i128;
                }
                s[r] = acc;
            }
            for j in 0..k {
                let mut acc = 0i128;
                for r in 0..n {
                    acc += u[j][r] as i128 * s[r];
                }
                gram[j * k + i] =
                    i64::try_from(acc).map_err(|_| QFormError::Overflow("transform"))?;
            }
        }
        let form = QuadForm { dim: k, gram };
        form.check_positive_definite()?;
        Ok(form)
    }

    /// Exact representation counts r_Q(0..=bound).
    pub fn theta_coefficients(&self, bound: u64) -> Result<Vec<u64>> {
        theta::theta_coefficients(self, bound, theta::DEFAULT_POINT_CAP)
    }

    pub fn theta_with_cap(&self, bound: u64, point_cap: f64) -> Result<Vec<u64>> {
        theta::theta_coefficients(self, bound, point_cap)
    }

    /// True iff some integer vector has Q(x) = m.
    pub fn is_represented(&self, m: u64) -> bool {
        if m == 0 {
            return true;
        }
        theta::find_representation(self, m).is_some()
    }

    /// A witness vector with Q(x) = m, if one exists.
    pub fn find_representation(&self, m: u64) -> Option<Vec<i64>> {
        theta::find_representation(self, m)
    }

    /// All vectors with 0 < Q(x) ≤ bound, one representative per ± pair
    /// (first nonzero coordinate positive), with their values.
    pub fn short_vectors(&self, bound: u64) -> Result<Vec<(Vec<i64>, u64)>> {
        theta::short_vectors(self, bound)
    }

    /// Least positive represented integer (≤ min of the diagonal).
    pub fn minimum(&self) -> u64 {
        if self.dim == 0 {
            return 0; // nothing positive is represented
        }
        let bound = (0..self.dim).map(|i| self.entry(i, i)).min().unwrap() as u64;
        let th = self
            .theta_coefficients(bound)
            .expect("minimum enumeration within diagonal bound");
        (1..=bound).find(|&m| th[m as usize] > 0).unwrap_or(0)
    }

    /// FNV-1a over dim and Gram entries; stable identifier for file headers.
    pub fn fnv_hash(&self) -> u64 {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        let mut eat = |bytes: &[u8]| {
            for &b in bytes {
                h ^= b as u64;
                h = h.wrapping_mul(0x1000_0000_01b3);
            }
        };
        eat(&(self.dim as u64).to_le_bytes());
        for &g in &self.gram {
            eat(&g.to_le_bytes());
        }
        h
    }
}

/// Exact determinant via Bareiss fraction-free elimination.
pub(crate) fn det_bareiss(m: &[i128], n: usize) -> i128 {
    if n == 0 {
        return 1;
    }
    let mut a = m.to_vec();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k * n + k] == 0 {
            // pivot search
            let mut found = false;
            for r in k + 1..n {
                if a[r * n + k] != 0 {
                    for c in 0..n {
                        a.swap(k * n + c, r * n + c);
                    }
                    sign = -sign;
                    found = true;
                    break;
                }
            }
            if !found {
                return 0;
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
                a[i * n + j] = num / prev;
            }
            a[i * n + k] = 0;
        }
        prev = a[k * n + k];
    }
    sign * a[n * n - 1]
}

pub(crate) fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn lcm_i128(a: i128, b: i128) -> Option<i128> {
    if a == 0 || b == 0 {
        return Some(0);
    }
    (a / gcd_i128(a, b)).checked_mul(b)
}

/// Kronecker symbol (a|n) for n ≥ 1.
pub fn kronecker(a: i128, n: i128) -> i32 {
    debug_assert!(n >= 1);
    let mut a = a;
    let mut n = n;
    let mut result = 1i32;
    if n == 0 {
        return if a == 1 || a == -1 { 1 } else { 0 };
    }
    // factor out 2s from n
    let mut twos = 0;
    while n % 2 == 0 {
        n /= 2;
        twos += 1;
    }
    if twos > 0 {
        if a % 2 == 0 {
            return 0;
        }
        // (a|2) = (2|a) by the Kronecker convention = (-1)^((a^2-1)/8)
        let r = ((a % 8) + 8) % 8;
        let two_sym = if r == 1 || r == 7 { 1 } else { -1 };
        if twos % 2 == 1 {
            result *= two_sym;
        }
    }
    // now n odd ≥ 1: Jacobi symbol
    a = ((a % n) + n) % n;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            let r = n % 8;
            if r == 3 || r == 5 {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}
