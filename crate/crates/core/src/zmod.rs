//! Exact linear algebra over `Z/m`.
//!
//! Vectors are dense `Vec<u64>` of residues in `0..m`. Every routine works for
//! an arbitrary modulus `m >= 1`; the rings that actually occur are `Z/p^k`.
//!
//! Row spans are kept in Howell-style echelon form (see [`Echelon`]) so that
//! membership can be decided by greedy reduction even when pivots are zero
//! divisors. Kernels and solutions come from a diagonal (Smith) form with
//! tracked unimodular transforms.

/// Greatest common divisor, with `gcd(0, 0) = 0`.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Extended gcd on non-negative integers: returns `(g, x, y)` with `a x + b y = g`.
pub fn ext_gcd(a: u64, b: u64) -> (u64, i128, i128) {
    let (mut r0, mut r1) = (a as i128, b as i128);
    let (mut x0, mut x1) = (1i128, 0i128);
    let (mut y0, mut y1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (x0, x1) = (x1, x0 - q * x1);
        (y0, y1) = (y1, y0 - q * y1);
    }
    (r0 as u64, x0, y0)
}

/// Reduces a signed integer into `0..m`.
pub fn reduce(x: i128, m: u64) -> u64 {
    x.rem_euclid(m as i128) as u64
}

/// Multiplicative inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (g, x, _) = ext_gcd(a % m, m);
    (g == 1).then(|| reduce(x, m))
}

#[inline]
pub fn add(a: u64, b: u64, m: u64) -> u64 {
    let s = a + b;
    if s >= m {
        s - m
    } else {
        s
    }
}

#[inline]
pub fn sub(a: u64, b: u64, m: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + m - b
    }
}

#[inline]
pub fn mul(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

#[inline]
pub fn neg(a: u64, m: u64) -> u64 {
    if a == 0 {
        0
    } else {
        m - a
    }
}

/// Additive order of `a` in `Z/m`.
pub fn additive_order(a: u64, m: u64) -> u64 {
    m / gcd(a % m, m)
}

/// Splits `a` into `(u, g)` with `g = gcd(a, m)` and `u` a unit with `a = u g mod m`.
///
/// Used to normalize echelon pivots to divisors of `m`.
pub fn unit_normalize(a: u64, m: u64) -> (u64, u64) {
    let g = gcd(a, m);
    if g == 0 || g == m {
        return (1, if a % m == 0 { 0 } else { g });
    }
    // a = g * a', with gcd(a', m/g) = 1; lift a' to a unit mod m.
    let mg = m / g;
    let a1 = (a / g) % mg;
    let mut u = a1;
    while gcd(u, m) != 1 {
        u += mg;
    }
    (u, g)
}

/// `dst += c * src` entrywise mod `m`.
pub fn axpy(dst: &mut [u64], c: u64, src: &[u64], m: u64) {
    if c == 0 {
        return;
    }
    for (d, &s) in dst.iter_mut().zip(src) {
        if s != 0 {
            *d = add(*d, mul(c, s, m), m);
        }
    }
}

/// `c * v` entrywise mod `m`.
pub fn scale(v: &[u64], c: u64, m: u64) -> Vec<u64> {
    v.iter().map(|&x| mul(c, x, m)).collect()
}

pub fn is_zero(v: &[u64]) -> bool {
    v.iter().all(|&x| x == 0)
}

/// Row span of a set of vectors in `(Z/m)^n`, kept in Howell echelon form.
///
/// Each stored row has a pivot column, zeros before it, and a pivot value that
/// divides `m`. Whenever a row with pivot `d` is stored, `(m/d)` times that row
/// is also inserted, which makes greedy reduction a complete membership test.
#[derive(Clone, Debug)]
pub struct Echelon {
    m: u64,
    n: usize,
    rows: Vec<Vec<u64>>,
    pivot_of_col: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(m: u64, n: usize) -> Self {
        Echelon {
            m,
            n,
            rows: Vec::new(),
            pivot_of_col: vec![None; n],
        }
    }

    pub fn modulus(&self) -> u64 {
        self.m
    }

    pub fn width(&self) -> usize {
        self.n
    }

    /// Stored rows in pivot order.
    pub fn rows(&self) -> Vec<&[u64]> {
        (0..self.n)
            .filter_map(|c| self.pivot_of_col[c].map(|r| self.rows[r].as_slice()))
            .collect()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// Cyclic orders `m / pivot` of the stored rows.
    pub fn pivot_orders(&self) -> Vec<u64> {
        self.rows
            .iter()
            .map(|r| {
                let c = r.iter().position(|&x| x != 0).expect("stored rows are nonzero");
                self.m / r[c]
            })
            .collect()
    }

    /// Inserts a vector; returns true if the span grew.
    pub fn insert(&mut self, v: Vec<u64>) -> bool {
        debug_assert_eq!(v.len(), self.n);
        let m = self.m;
        let mut grew = false;
        let mut queue = vec![v];
        while let Some(mut v) = queue.pop() {
            let mut col = 0;
            loop {
                while col < self.n && v[col] == 0 {
                    col += 1;
                }
                if col == self.n {
                    break;
                }
                match self.pivot_of_col[col] {
                    None => {
                        let (u, g) = unit_normalize(v[col], m);
                        let uinv = inv_mod(u, m).unwrap();
                        let row = scale(&v, uinv, m);
                        debug_assert_eq!(row[col], g);
                        if g != 1 {
                            let ann = scale(&row, m / g, m);
                            if !is_zero(&ann) {
                                queue.push(ann);
                            }
                        }
                        self.pivot_of_col[col] = Some(self.rows.len());
                        self.rows.push(row);
                        grew = true;
                        break;
                    }
                    Some(ri) => {
                        let d = self.rows[ri][col];
                        let a = v[col];
                        if a % d == 0 {
                            let c = neg(a / d, m);
                            let row = &self.rows[ri];
                            axpy(&mut v, c, row, m);
                        } else {
                            // Unimodular combination: the row takes the gcd as pivot
                            // and v gets a zero in this column.
                            let (g, x, y) = ext_gcd(d, a);
                            let row = self.rows[ri].clone();
                            let mut new_row = vec![0u64; self.n];
                            let xr = reduce(x, m);
                            let yr = reduce(y, m);
                            for j in col..self.n {
                                new_row[j] =
                                    add(mul(xr, row[j], m), mul(yr, v[j], m), m);
                            }
                            let cr = reduce(-((a / g) as i128), m);
                            let cv = (d / g) % m;
                            let mut new_v = vec![0u64; self.n];
                            for j in col..self.n {
                                new_v[j] = add(mul(cr, row[j], m), mul(cv, v[j], m), m);
                            }
                            debug_assert_eq!(new_v[col], 0);
                            let (u, g2) = unit_normalize(new_row[col], m);
                            let uinv = inv_mod(u, m).unwrap();
                            let new_row = scale(&new_row, uinv, m);
                            if g2 != 1 {
                                let ann = scale(&new_row, m / g2, m);
                                if !is_zero(&ann) {
                                    queue.push(ann);
                                }
                            }
                            self.rows[ri] = new_row;
                            grew = true;
                            v = new_v;
                        }
                    }
                }
            }
        }
        grew
    }

    /// Reduces `v` against the stored rows; the result is zero iff `v` lies in the span.
    pub fn reduce(&self, v: &[u64]) -> Vec<u64> {
        let m = self.m;
        let mut v = v.to_vec();
        for col in 0..self.n {
            if v[col] == 0 {
                continue;
            }
            if let Some(ri) = self.pivot_of_col[col] {
                let d = self.rows[ri][col];
                if v[col] % d == 0 {
                    let c = neg(v[col] / d, m);
                    axpy(&mut v, c, &self.rows[ri], m);
                } else {
                    return v;
                }
            } else {
                return v;
            }
        }
        v
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        is_zero(&self.reduce(v))
    }

    /// Number of elements in the span, as a product of cyclic orders.
    pub fn span_order(&self) -> u128 {
        self.pivot_orders().iter().map(|&x| x as u128).product()
    }
}

/// Diagonal form `L A R = D` of a matrix over `Z/m`, with `R` and `R^{-1}` tracked.
///
/// `L` is tracked only on request, since most callers need column data alone.
#[derive(Clone, Debug)]
pub struct Diagonal {
    pub m: u64,
    pub rows: usize,
    pub cols: usize,
    /// Diagonal entries `D[i][i]` for `i < min(rows, cols)`, each a divisor of `m` (or 0).
    pub diag: Vec<u64>,
    pub r: Vec<Vec<u64>>,
    pub r_inv: Vec<Vec<u64>>,
    pub l: Option<Vec<Vec<u64>>>,
}

fn identity(n: usize) -> Vec<Vec<u64>> {
    (0..n)
        .map(|i| {
            let mut r = vec![0; n];
            r[i] = 1;
            r
        })
        .collect()
}

impl Diagonal {
    /// Computes a diagonal form of `a` (given as rows).
    pub fn compute(a: &[Vec<u64>], cols: usize, m: u64, track_l: bool) -> Diagonal {
        let rows = a.len();
        let mut mat: Vec<Vec<u64>> = a.iter().map(|r| r.iter().map(|&x| x % m).collect()).collect();
        let mut r = identity(cols);
        let mut r_inv = identity(cols);
        let mut l = track_l.then(|| identity(rows));
        let k = rows.min(cols);
        let mut diag = Vec::with_capacity(k);

        // Column operation col_j <- x col_i + y col_j style helpers act on mat, r.
        // r_inv is updated with the inverse row operation so that R * R^{-1} = I.
        for t in 0..k {
            // Pivot: entry in the trailing block with the smallest gcd with m.
            let mut best: Option<(u64, usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let x = mat[i][j];
                    if x != 0 {
                        let g = gcd(x, m);
                        if best.map_or(true, |(bg, _, _)| g < bg) {
                            best = Some((g, i, j));
                            if g == 1 {
                                break;
                            }
                        }
                    }
                }
                if matches!(best, Some((1, _, _))) {
                    break;
                }
            }
            let Some((_, pi, pj)) = best else {
                diag.extend(std::iter::repeat(0).take(k - t));
                break;
            };
            mat.swap(t, pi);
            if let Some(l) = l.as_mut() {
                l.swap(t, pi);
            }
            swap_cols(&mut mat, &mut r, &mut r_inv, t, pj);
            loop {
                let mut changed = false;
                // Clear column t below the pivot with row operations.
                for i in t + 1..rows {
                    let b = mat[i][t];
                    if b == 0 {
                        continue;
                    }
                    let a0 = mat[t][t];
                    if a0 != 0 && b % a0 == 0 {
                        let c = neg(b / a0, m);
                        let (top, rest) = mat.split_at_mut(i);
                        axpy(&mut rest[0][t..], c, &top[t][t..], m);
                        if let Some(l) = l.as_mut() {
                            let (top, rest) = l.split_at_mut(i);
                            axpy(&mut rest[0], c, &top[t], m);
                        }
                    } else {
                        row_gcd(&mut mat, l.as_mut(), t, i, t, m);
                        changed = true;
                    }
                }
                // Clear row t to the right of the pivot with column operations.
                for j in t + 1..cols {
                    let b = mat[t][j];
                    if b == 0 {
                        continue;
                    }
                    let a0 = mat[t][t];
                    if a0 != 0 && b % a0 == 0 {
                        let c = neg(b / a0, m);
                        col_axpy(&mut mat, &mut r, &mut r_inv, j, c, t, m);
                    } else {
                        col_gcd(&mut mat, &mut r, &mut r_inv, t, j, m);
                        changed = true;
                    }
                }
                if !changed {
                    break;
                }
            }
            // Normalize the pivot to a divisor of m by a unit column scaling.
            let (u, g) = unit_normalize(mat[t][t], m);
            if u != 1 {
                let uinv = inv_mod(u, m).unwrap();
                col_scale(&mut mat, &mut r, &mut r_inv, t, uinv, u, m);
            }
            debug_assert_eq!(mat[t][t], g);
            diag.push(g);
        }
        Diagonal {
            m,
            rows,
            cols,
            diag,
            r,
            r_inv,
            l,
        }
    }

    /// Generators of `{x : A x = 0}` (column vectors of length `cols`).
    pub fn kernel(&self) -> Vec<Vec<u64>> {
        let m = self.m;
        let mut out = Vec::new();
        for i in 0..self.cols {
            let d = self.diag.get(i).copied().unwrap_or(0);
            let factor = if d == 0 { 1 } else { m / gcd(d, m) };
            if factor % m == 0 {
                continue;
            }
            // x = R e_i * factor
            let v: Vec<u64> = (0..self.cols).map(|row| mul(self.r[row][i], factor, m)).collect();
            if !is_zero(&v) {
                out.push(v);
            }
        }
        out
    }

    /// Solves `A x = v` if possible. Requires `L` to have been tracked.
    pub fn solve(&self, v: &[u64]) -> Option<Vec<u64>> {
        let m = self.m;
        let l = self.l.as_ref().expect("solve needs the left transform");
        let lv: Vec<u64> = l
            .iter()
            .map(|row| row.iter().zip(v).fold(0, |acc, (&a, &b)| add(acc, mul(a, b, m), m)))
            .collect();
        let mut y = vec![0u64; self.cols];
        for i in 0..self.rows {
            let d = self.diag.get(i).copied().unwrap_or(0);
            let target = lv[i];
            if d == 0 {
                if target != 0 {
                    return None;
                }
                continue;
            }
            let g = gcd(d, m);
            if target % g != 0 {
                return None;
            }
            let mg = m / g;
            let dinv = inv_mod((d / g) % mg, mg).unwrap_or(0);
            y[i] = mul((target / g) % mg.max(1), dinv, mg.max(1));
        }
        let x = (0..self.cols)
            .map(|row| {
                (0..self.cols).fold(0, |acc, j| add(acc, mul(self.r[row][j], y[j], m), m))
            })
            .collect();
        Some(x)
    }
}

fn swap_cols(mat: &mut [Vec<u64>], r: &mut [Vec<u64>], r_inv: &mut [Vec<u64>], a: usize, b: usize) {
    if a == b {
        return;
    }
    for row in mat.iter_mut() {
        row.swap(a, b);
    }
    for row in r.iter_mut() {
        row.swap(a, b);
    }
    r_inv.swap(a, b);
}

/// col_j += c * col_t (and the inverse row operation on R^{-1}: row_t -= c row_j).
fn col_axpy(
    mat: &mut [Vec<u64>],
    r: &mut [Vec<u64>],
    r_inv: &mut [Vec<u64>],
    j: usize,
    c: u64,
    t: usize,
    m: u64,
) {
    for row in mat.iter_mut().chain(r.iter_mut()) {
        let v = row[t];
        if v != 0 {
            row[j] = add(row[j], mul(c, v, m), m);
        }
    }
    let nc = neg(c, m);
    let row_j = r_inv[j].clone();
    axpy(&mut r_inv[t], nc, &row_j, m);
}

fn col_scale(
    mat: &mut [Vec<u64>],
    r: &mut [Vec<u64>],
    r_inv: &mut [Vec<u64>],
    t: usize,
    c: u64,
    c_inv: u64,
    m: u64,
) {
    for row in mat.iter_mut().chain(r.iter_mut()) {
        row[t] = mul(row[t], c, m);
    }
    for x in r_inv[t].iter_mut() {
        *x = mul(*x, c_inv, m);
    }
}

/// Replaces rows t, i by a unimodular combination putting gcd(mat[t][col], mat[i][col]) at t.
fn row_gcd(mat: &mut [Vec<u64>], l: Option<&mut Vec<Vec<u64>>>, t: usize, i: usize, col: usize, m: u64) {
    let a = mat[t][col];
    let b = mat[i][col];
    let (g, x, y) = ext_gcd(a, b);
    let (xr, yr) = (reduce(x, m), reduce(y, m));
    let cr = reduce(-((b / g) as i128), m);
    let cv = (a / g) % m;
    let combine = |rows: &mut [Vec<u64>]| {
        let rt = rows[t].clone();
        let ri = rows[i].clone();
        for j in 0..rt.len() {
            rows[t][j] = add(mul(xr, rt[j], m), mul(yr, ri[j], m), m);
            rows[i][j] = add(mul(cr, rt[j], m), mul(cv, ri[j], m), m);
        }
    };
    combine(mat);
    if let Some(l) = l {
        combine(l);
    }
}

/// Column analogue of [`row_gcd`] on columns t, j; updates R and R^{-1}.
fn col_gcd(mat: &mut [Vec<u64>], r: &mut [Vec<u64>], r_inv: &mut [Vec<u64>], t: usize, j: usize, m: u64) {
    let a = mat[t][t];
    let b = mat[t][j];
    let (g, x, y) = ext_gcd(a, b);
    let (xr, yr) = (reduce(x, m), reduce(y, m));
    let cr = reduce(-((b / g) as i128), m);
    let cv = (a / g) % m;
    // New columns: col_t' = x col_t + y col_j ; col_j' = cr col_t + cv col_j.
    // This is right multiplication by U = [[x, cr], [y, cv]] on (t, j), det = 1.
    for row in mat.iter_mut().chain(r.iter_mut()) {
        let (vt, vj) = (row[t], row[j]);
        row[t] = add(mul(xr, vt, m), mul(yr, vj, m), m);
        row[j] = add(mul(cr, vt, m), mul(cv, vj, m), m);
    }
    // R^{-1} gets U^{-1} = [[cv, -cr], [-y, x]] applied on the left to rows t, j.
    let (rt, rj) = (r_inv[t].clone(), r_inv[j].clone());
    let (ncr, ny) = (neg(cr, m), neg(yr, m));
    for k in 0..rt.len() {
        r_inv[t][k] = add(mul(cv, rt[k], m), mul(ncr, rj[k], m), m);
        r_inv[j][k] = add(mul(ny, rt[k], m), mul(xr, rj[k], m), m);
    }
}

/// Generators of the kernel of `x -> A x` where `A` has the given rows and `cols` columns.
///
/// Rows are first compressed into echelon form so tall systems stay cheap.
pub fn kernel<I>(rows: I, cols: usize, m: u64) -> Vec<Vec<u64>>
where
    I: IntoIterator<Item = Vec<u64>>,
{
    let mut ech = Echelon::new(m, cols);
    for r in rows {
        ech.insert(r);
    }
    let compressed: Vec<Vec<u64>> = ech.rows().into_iter().map(|r| r.to_vec()).collect();
    if compressed.is_empty() {
        return identity(cols).into_iter().filter(|_| m > 1).collect();
    }
    Diagonal::compute(&compressed, cols, m, false).kernel()
}

/// Expresses vectors as `Z/m`-combinations of a fixed generator list.
///
/// Internally an echelon form of the augmented vectors `(g_i | e_i)`; rows whose
/// left part vanished record relations among the generators.
#[derive(Clone, Debug)]
pub struct Expresser {
    m: u64,
    n: usize,
    k: usize,
    ech: Echelon,
}

impl Expresser {
    pub fn new(m: u64, n: usize, gens: &[Vec<u64>]) -> Expresser {
        let k = gens.len();
        let mut ech = Echelon::new(m, n + k);
        for (i, g) in gens.iter().enumerate() {
            let mut v = Vec::with_capacity(n + k);
            v.extend_from_slice(g);
            v.resize(n + k, 0);
            v[n + i] = 1 % m;
            ech.insert(v);
        }
        Expresser { m, n, k, ech }
    }

    /// Coefficients `c` with `v = sum c_i g_i`, or `None` if `v` is outside the span.
    pub fn express(&self, v: &[u64]) -> Option<Vec<u64>> {
        debug_assert_eq!(v.len(), self.n);
        let mut w = v.to_vec();
        w.resize(self.n + self.k, 0);
        let r = self.ech.reduce(&w);
        if !is_zero(&r[..self.n]) {
            return None;
        }
        Some(r[self.n..].iter().map(|&x| neg(x, self.m)).collect())
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.express(v).is_some()
    }

    /// Generators of the relation module `{c : sum c_i g_i = 0}`.
    pub fn relations(&self) -> Vec<Vec<u64>> {
        self.ech
            .rows()
            .into_iter()
            .filter(|r| is_zero(&r[..self.n]))
            .map(|r| r[self.n..].to_vec())
            .collect()
    }
}

/// A finitely generated submodule quotient `S / T` over `Z/m`, with `T <= S <= (Z/m)^n`.
///
/// `S` is spanned by `sup` and `T` by `sub`. The quotient is presented as a
/// direct sum of cyclic groups with explicit basis vectors in `S`.
#[derive(Clone, Debug)]
pub struct QuotientModule {
    m: u64,
    n: usize,
    sup: Vec<Vec<u64>>,
    sub: Vec<Vec<u64>>,
    /// Orders of the basis classes (all > 1), ascending.
    orders: Vec<u64>,
    /// Basis of the quotient, as vectors in `(Z/m)^n`.
    basis: Vec<Vec<u64>>,
    /// Coefficients of each basis vector in terms of `sup`.
    basis_coeffs: Vec<Vec<u64>>,
    /// For a coefficient vector `a` on `sup`, coordinate `k` is `(a . col_k) mod orders[k]`.
    coord_cols: Vec<Vec<u64>>,
    /// Generators of `{a : sum a_i sup_i in T}`.
    relations: Vec<Vec<u64>>,
    all: Expresser,
    sub_only: Expresser,
}

impl QuotientModule {
    pub fn new(m: u64, n: usize, sup: Vec<Vec<u64>>, sub: Vec<Vec<u64>>) -> QuotientModule {
        let s = sup.len();
        let gens: Vec<Vec<u64>> = sup.iter().chain(sub.iter()).cloned().collect();
        let all = Expresser::new(m, n, &gens);
        let sub_only = Expresser::new(m, n, &sub);
        // Relations among the sup generators modulo T.
        let rel: Vec<Vec<u64>> = all
            .relations()
            .into_iter()
            .map(|z| z[..s].to_vec())
            .filter(|z| !is_zero(z))
            .collect();
        // (Z/m)^s / span(rel): with rel R = L^{-1} D, right multiplication by R
        // carries the quotient onto a direct sum of cyclic groups.
        let (diag, r, r_inv) = if s == 0 {
            (Vec::new(), Vec::new(), Vec::new())
        } else if rel.is_empty() {
            (vec![0; s], identity(s), identity(s))
        } else {
            let d = Diagonal::compute(&rel, s, m, false);
            let mut diag = d.diag.clone();
            diag.resize(s, 0);
            (diag, d.r, d.r_inv)
        };
        let mut entries: Vec<(u64, usize)> = Vec::new();
        for (k, &d) in diag.iter().enumerate() {
            let order = if d == 0 { m } else { gcd(d, m) };
            if order > 1 {
                entries.push((order, k));
            }
        }
        entries.sort();
        let mut orders = Vec::new();
        let mut basis = Vec::new();
        let mut basis_coeffs = Vec::new();
        let mut coord_cols = Vec::new();
        for (order, k) in entries {
            let coeffs = r_inv[k].clone();
            let mut v = vec![0u64; n];
            for (i, &c) in coeffs.iter().enumerate() {
                axpy(&mut v, c, &sup[i], m);
            }
            orders.push(order);
            basis.push(v);
            basis_coeffs.push(coeffs);
            coord_cols.push((0..s).map(|i| r[i][k]).collect());
        }
        QuotientModule {
            m,
            n,
            sup,
            sub,
            orders,
            basis,
            basis_coeffs,
            coord_cols,
            relations: rel,
            all,
            sub_only,
        }
    }

    pub fn modulus(&self) -> u64 {
        self.m
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn basis(&self) -> &[Vec<u64>] {
        &self.basis
    }

    pub fn basis_coeffs(&self) -> &[Vec<u64>] {
        &self.basis_coeffs
    }

    pub fn sup(&self) -> &[Vec<u64>] {
        &self.sup
    }

    pub fn sub(&self) -> &[Vec<u64>] {
        &self.sub
    }

    /// Generators of the module of coefficient vectors `a` with `sum a_i sup_i` in `T`.
    pub fn relations(&self) -> &[Vec<u64>] {
        &self.relations
    }

    pub fn order(&self) -> u128 {
        self.orders.iter().map(|&x| x as u128).product()
    }

    /// Coordinates of the class of `sum a_i sup_i`.
    pub fn coords_of_coeffs(&self, a: &[u64]) -> Vec<u64> {
        let m = self.m;
        self.coord_cols
            .iter()
            .zip(&self.orders)
            .map(|(col, &o)| {
                let x = col.iter().zip(a).fold(0u64, |acc, (&c, &ai)| add(acc, mul(c, ai, m), m));
                x % o
            })
            .collect()
    }

    /// Writes `v` as `sum a_i sup_i + sum b_j sub_j`; `None` if `v` is not in `S`.
    pub fn solve(&self, v: &[u64]) -> Option<(Vec<u64>, Vec<u64>)> {
        debug_assert_eq!(v.len(), self.n);
        let s = self.sup.len();
        let z = self.all.express(v)?;
        Some((z[..s].to_vec(), z[s..].to_vec()))
    }

    /// Coordinates of `v + T` in the cyclic decomposition; `None` if `v` is not in `S`.
    pub fn decompose(&self, v: &[u64]) -> Option<Vec<u64>> {
        let (a, _) = self.solve(v)?;
        Some(self.coords_of_coeffs(&a))
    }

    /// Whether `v` lies in `T`.
    pub fn in_sub(&self, v: &[u64]) -> bool {
        self.sub_only.contains(v)
    }

    /// Coefficients `b` with `v = sum b_j sub_j`, if `v` lies in `T`.
    pub fn sub_witness(&self, v: &[u64]) -> Option<Vec<u64>> {
        self.sub_only.express(v)
    }

    /// The vector `sum c_k basis_k`.
    pub fn combine(&self, coords: &[u64]) -> Vec<u64> {
        let mut v = vec![0u64; self.n];
        for (k, &c) in coords.iter().enumerate() {
            axpy(&mut v, c, &self.basis[k], self.m);
        }
        v
    }
}
