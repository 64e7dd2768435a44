//! Lattices between `ϖ^kΛ°` and `ϖ^{−k}Λ°`, modelled as submodules of
//! `R_m^N` with `m = 2k` via `L ↦ ϖ^k L / ϖ^{2k}Λ°`.
//!
//! Here `Λ°` is the standard self-dual lattice for the antidiagonal
//! hermitian pairing, and `⟨a, b⟩ = aᵀ J σ(b)` computes `L^∨` inside the
//! window.

use num_bigint::BigInt;

use super::chainring::{ChainRing, RVec, MAX_M};
use super::linalg::{check_budget, enumerate_subspaces, grassmann_count, Vector};
use super::DEFAULT_BUDGET;
use crate::error::{domain, Error, Result};
use crate::qcalc::{q_binomial, QBase};

/// A lattice in a window, stored by the Howell form of its module.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WindowLattice {
    q: u32,
    n: usize,
    m: usize,
    rows: Vec<RVec>,
}

impl WindowLattice {
    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn rows(&self) -> &[RVec] {
        &self.rows
    }

    pub fn window(&self) -> Window {
        Window::new(self.q, self.n, self.m).expect("window of an existing lattice")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LatticeKind {
    Circ,
    Bullet,
    Other,
}

/// The ambient window `[ϖ^kΛ°, ϖ^{−k}Λ°]`.
#[derive(Clone, Debug)]
pub struct Window {
    ring: ChainRing,
    n: usize,
}

impl Window {
    pub fn new(q: u32, n: usize, m: usize) -> Result<Window> {
        if !m.is_multiple_of(2) {
            return domain(format!("window exponent {m} must be even"));
        }
        Ok(Window { ring: ChainRing::new(q, m)?, n })
    }

    pub fn ring(&self) -> &ChainRing {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.ring.m()
    }

    fn k(&self) -> usize {
        self.m() / 2
    }

    /// `⌊N/2⌋`.
    pub fn r(&self) -> usize {
        self.n / 2
    }

    pub fn lattice(&self, gens: &[RVec]) -> WindowLattice {
        WindowLattice {
            q: self.ring.q(),
            n: self.n,
            m: self.m(),
            rows: self.ring.howell(gens, self.n),
        }
    }

    fn check(&self, l: &WindowLattice) -> Result<()> {
        if (l.q, l.n, l.m) != (self.ring.q(), self.n, self.m()) {
            return domain("lattice belongs to a different window");
        }
        Ok(())
    }

    fn diagonal(&self, exps: impl Fn(usize) -> usize) -> WindowLattice {
        let gens: Vec<RVec> = (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| if i == j { self.ring.pi_pow(exps(i)) } else { self.ring.zero() })
                    .collect()
            })
            .collect();
        self.lattice(&gens)
    }

    /// `ϖ^t Λ°` for `|t| ≤ k`.
    pub fn scaled_standard(&self, t: i64) -> Result<WindowLattice> {
        let k = self.k() as i64;
        if t.abs() > k {
            return domain(format!("ϖ^{t}Λ° lies outside the window"));
        }
        Ok(self.diagonal(|_| (k + t) as usize))
    }

    /// `Λ°`.
    pub fn standard_circ(&self) -> WindowLattice {
        self.diagonal(|_| self.k())
    }

    /// `Λ•`: `ϖ^{−1}` on the first `⌊N/2⌋` basis vectors, `O` elsewhere.
    pub fn standard_bullet(&self) -> WindowLattice {
        let r = self.r();
        let k = self.k();
        self.diagonal(|i| if i < r { k - 1 } else { k })
    }

    /// The circ lattice at relative position `δ` from `Λ°`:
    /// `ϖ^{−1}` on the first `δ` vectors, `ϖ` on the last `δ`.
    pub fn standard_circ_at(&self, delta: usize) -> Result<WindowLattice> {
        if delta > self.r() {
            return domain(format!("δ = {delta} exceeds ⌊N/2⌋"));
        }
        let (n, k) = (self.n, self.k());
        Ok(self.diagonal(|i| {
            if i < delta {
                k - 1
            } else if i + delta >= n {
                k + 1
            } else {
                k
            }
        }))
    }

    pub fn length(&self, l: &WindowLattice) -> usize {
        self.ring.length(&l.rows)
    }

    /// `a ⊇ b`.
    pub fn contains(&self, a: &WindowLattice, b: &WindowLattice) -> bool {
        self.ring.contains(&a.rows, &b.rows)
    }

    pub fn sum(&self, a: &WindowLattice, b: &WindowLattice) -> WindowLattice {
        let mut g = a.rows.clone();
        g.extend(b.rows.iter().cloned());
        self.lattice(&g)
    }

    /// `L^∨`, computed as the orthogonal of the module for `⟨·,·⟩`.
    pub fn dual(&self, l: &WindowLattice) -> WindowLattice {
        let n = self.n;
        let r = &self.ring;
        // ⟨a, b⟩ = Σ_j a_{n−1−j} σ(b)_j, so σ(b) lies in the kernel of the reversed rows.
        let reversed: Vec<RVec> = l.rows.iter().map(|row| row.iter().rev().copied().collect()).collect();
        let ker = r.kernel(&reversed, n);
        let conj: Vec<RVec> = ker.iter().map(|v| v.iter().map(|&x| r.conj(x)).collect()).collect();
        self.lattice(&conj)
    }

    pub fn intersect(&self, a: &WindowLattice, b: &WindowLattice) -> WindowLattice {
        self.dual(&self.sum(&self.dual(a), &self.dual(b)))
    }

    /// The image of `ϖL` (exact when `ϖL` stays in the window).
    pub fn pi_mul(&self, l: &WindowLattice) -> WindowLattice {
        let pi = self.ring.pi_pow(1);
        let g: Vec<RVec> = l.rows.iter().map(|row| row.iter().map(|&x| self.ring.mul(pi, x)).collect()).collect();
        self.lattice(&g)
    }

    /// `{a : πa ∈ M}`, the image of `ϖ^{−1}L` when that stays in the window.
    pub fn pi_inv(&self, l: &WindowLattice) -> WindowLattice {
        self.dual(&self.pi_mul(&self.dual(l)))
    }

    pub fn is_circ(&self, l: &WindowLattice) -> bool {
        &self.dual(l) == l
    }

    /// `ϖL ⊆ L^∨` with `L^∨/ϖL` of length `N − 2⌊N/2⌋`.
    pub fn is_bullet(&self, l: &WindowLattice) -> bool {
        self.length(l) == self.k() * self.n + self.r() && self.contains(&self.dual(l), &self.pi_mul(l))
    }

    pub fn classify(&self, l: &WindowLattice) -> LatticeKind {
        if self.is_circ(l) {
            LatticeKind::Circ
        } else if self.is_bullet(l) {
            LatticeKind::Bullet
        } else {
            LatticeKind::Other
        }
    }

    /// `Disc(a, b) = ℓ(a/(a∩b)) + ℓ(b/(a∩b))`.
    pub fn disc(&self, a: &WindowLattice, b: &WindowLattice) -> usize {
        let i = self.length(&self.intersect(a, b));
        self.length(a) + self.length(b) - 2 * i
    }

    /// The same lattice viewed in a wider window `m' ≥ m`.
    pub fn rewindow(&self, l: &WindowLattice, target: &Window) -> Result<WindowLattice> {
        self.check(l)?;
        if target.n != self.n || target.ring.q() != self.ring.q() || target.m() < self.m() {
            return domain("target window must be at least as wide");
        }
        let shift = target.k() - self.k();
        let tr = &target.ring;
        let mut gens: Vec<RVec> = l
            .rows
            .iter()
            .map(|row| row.iter().map(|&x| tr.shift_up(self.ring.lift_to(x, tr), shift)).collect())
            .collect();
        let old_floor = target.scaled_standard(self.k() as i64)?;
        gens.extend(old_floor.rows);
        Ok(target.lattice(&gens))
    }

    /// A residue-field basis of `upper/lower`, assuming `π·upper ⊆ lower`.
    pub fn quotient_basis(&self, lower: &WindowLattice, upper: &WindowLattice) -> Vec<RVec> {
        let r = &self.ring;
        let mut current = lower.rows.clone();
        let mut basis = Vec::new();
        for row in &upper.rows {
            for j in 0..self.m() {
                let cand: RVec = row.iter().map(|&x| r.shift_up(x, j)).collect();
                if !r.member(&current, &cand) {
                    let mut g = current.clone();
                    g.push(cand.clone());
                    current = r.howell(&g, self.n);
                    basis.push(cand);
                }
            }
        }
        basis
    }

    /// Calls `visit` on `lower + W` for every `dim`-dimensional subspace `W`
    /// of the residue-field span of `basis`.
    fn for_each_between(
        &self,
        lower: &WindowLattice,
        basis: &[RVec],
        dim: usize,
        visit: &mut dyn FnMut(WindowLattice),
    ) {
        let r = &self.ring;
        let f = r.field().field().clone();
        enumerate_subspaces(&f, basis.len(), dim, &mut |_| true, &mut |w: &[Vector]| {
            let mut gens = lower.rows.clone();
            for coeffs in w {
                let mut v = vec![r.zero(); self.n];
                for (&c, b) in coeffs.iter().zip(basis) {
                    let c = r.from_field(c);
                    for (x, &y) in v.iter_mut().zip(b) {
                        *x = r.add(*x, r.mul(c, y));
                    }
                }
                gens.push(v);
            }
            visit(self.lattice(&gens));
        });
    }

    /// Bullet lattices `Λ` with `L ⊆ Λ ⊆ ϖ^{−1}L` for a circ `L`. The window
    /// must contain `ϖ^{−1}L`.
    pub fn bullets_over(&self, l: &WindowLattice) -> Vec<WindowLattice> {
        let upper = self.pi_inv(l);
        let basis = self.quotient_basis(l, &upper);
        let mut out = Vec::new();
        self.for_each_between(l, &basis, self.r(), &mut |cand| {
            if self.is_bullet(&cand) {
                out.push(cand);
            }
        });
        out
    }
}

/// Every lattice `ϖΛ° ⊆ L ⊆ ϖ^{−1}Λ°`, sorted by normal form.
pub fn enumerate_window(q: u32, n: usize) -> Result<Vec<WindowLattice>> {
    enumerate_window_with_budget(q, n, DEFAULT_BUDGET)
}

/// Number of submodules of `R_2^N`: pairs `W ⊆ U` of subspaces of `F_{q²}^N`
/// with a linear map `W → F_{q²}^N/U`.
pub fn window_size(q: u32, n: usize) -> BigInt {
    let big_q = (q as u64) * (q as u64);
    let mut total = BigInt::default();
    for u in 0..=n {
        for w in 0..=u {
            let maps = BigInt::from(big_q).pow((w * (n - u)) as u32);
            total += BigInt::from(grassmann_count(big_q, n, u)) * BigInt::from(grassmann_count(big_q, u, w)) * maps;
        }
    }
    total
}

pub fn enumerate_window_with_budget(q: u32, n: usize, budget: u64) -> Result<Vec<WindowLattice>> {
    let win = Window::new(q, n, 2)?;
    let size = window_size(q, n);
    check_budget(size.magnitude(), budget, "window enumeration")?;
    let r = &win.ring;
    let f = r.field().field().clone();
    let big_q = f.order() as usize;
    let mut out = Vec::new();
    for u_dim in 0..=n {
        enumerate_subspaces(&f, n, u_dim, &mut |_| true, &mut |u: &[Vector]| {
            let pivots: Vec<usize> = u.iter().map(|row| row.iter().position(|&x| x != 0).expect("basis row")).collect();
            let comp: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
            for w_dim in 0..=u_dim {
                enumerate_subspaces(&f, u_dim, w_dim, &mut |_| true, &mut |wc: &[Vector]| {
                    let w: Vec<Vector> = wc
                        .iter()
                        .map(|coeffs| {
                            (0..n)
                                .map(|j| {
                                    coeffs.iter().zip(u).fold(0, |acc, (&c, row)| f.add(acc, f.mul(c, row[j])))
                                })
                                .collect()
                        })
                        .collect();
                    let slots = w_dim * comp.len();
                    let maps = big_q.pow(slots as u32);
                    for code in 0..maps {
                        let mut gens: Vec<RVec> = u
                            .iter()
                            .map(|row| row.iter().map(|&x| r.shift_up(r.from_field(x), 1)).collect())
                            .collect();
                        let mut c = code;
                        for wrow in &w {
                            let mut v: RVec = wrow.iter().map(|&x| r.from_field(x)).collect();
                            for &col in &comp {
                                let digit = (c % big_q) as u16;
                                c /= big_q;
                                v[col].0[1] = f.add(v[col].0[1], digit);
                            }
                            gens.push(v);
                        }
                        out.push(win.lattice(&gens));
                    }
                });
            }
        });
    }
    out.sort();
    if out.windows(2).any(|p| p[0] == p[1]) {
        return Err(Error::Invariant("window enumeration produced duplicates".into()));
    }
    Ok(out)
}

pub fn classify(l: &WindowLattice) -> LatticeKind {
    l.window().classify(l)
}

/// Number of bullet lattices `Λ` with `L1 ⊆ Λ ⊆ ϖ^{−1}L1` and
/// `L2 ⊆ Λ ⊆ ϖ^{−1}L2`, for circ `L1`, `L2` with `ϖL2 ⊆ L1 ⊆ ϖ^{−1}L2`.
pub fn count_bullet_between(l1: &WindowLattice, l2: &WindowLattice) -> Result<u64> {
    count_bullet_between_in(l1, l2, l1.m() + 2)
}

/// As [`count_bullet_between`], working in a window of exponent `m_work`.
pub fn count_bullet_between_in(l1: &WindowLattice, l2: &WindowLattice, m_work: usize) -> Result<u64> {
    let win = l1.window();
    win.check(l2)?;
    if m_work < l1.m() + 2 || m_work > MAX_M {
        return domain(format!("working window {m_work} must lie in {}..={MAX_M}", l1.m() + 2));
    }
    if !win.is_circ(l1) || !win.is_circ(l2) {
        return domain("both lattices must be self-dual");
    }
    let wide = Window::new(l1.q(), l1.n(), m_work)?;
    let a = win.rewindow(l1, &wide)?;
    let b = win.rewindow(l2, &wide)?;
    if !wide.contains(&a, &wide.pi_mul(&b)) || !wide.contains(&b, &wide.pi_mul(&a)) {
        return domain("lattices are not adjacent: need ϖL2 ⊆ L1 ⊆ ϖ^{-1}L2");
    }
    let f = wide.ring.field();
    check_budget(&grassmann_count(f.order() as u64, wide.n, wide.r()), DEFAULT_BUDGET, "bullet enumeration")?;
    let upper_b = wide.pi_inv(&b);
    let count = wide
        .bullets_over(&a)
        .iter()
        .filter(|c| wide.contains(c, &b) && wide.contains(&upper_b, c))
        .count();
    Ok(count as u64)
}

/// `(δ, count_bullet_between(Λ°, L))` for each circ `L` in the `m = 2` window.
pub fn bullet_count_census(q: u32, n: usize) -> Result<Vec<(usize, u64)>> {
    let win = Window::new(q, n, 2)?;
    let base = win.standard_circ();
    let mut out = Vec::new();
    for l in enumerate_window(q, n)? {
        if win.is_circ(&l) {
            out.push((win.disc(&base, &l) / 2, count_bullet_between(&base, &l)?));
        }
    }
    Ok(out)
}

fn elementary_length(win: &Window, big: &WindowLattice, small: &WindowLattice) -> Option<usize> {
    win.contains(small, &win.pi_mul(big))
        .then(|| win.length(big) - win.length(small))
}

/// `γ(L)`: the dimension of `(L + Λ•)/Λ•` when it is killed by `ϖ`.
pub fn gamma(l: &WindowLattice) -> Option<usize> {
    let win = l.window();
    let lb = win.standard_bullet();
    elementary_length(&win, &win.sum(l, &lb), &lb)
}

/// Brute-force `(c•_δ(L), c°_δ(L))` for a circ `L` in the `m = 2` window.
pub fn mixed_counts_for(l: &WindowLattice, delta: usize) -> Result<(u64, u64)> {
    let win = l.window();
    if win.n().is_multiple_of(2) {
        return domain("mixed counts need odd N");
    }
    if !win.is_circ(l) {
        return domain("mixed counts need a self-dual lattice");
    }
    let wide = Window::new(l.q(), l.n(), l.m() + 2)?;
    let lw = win.rewindow(l, &wide)?;
    let lb = wide.standard_bullet();
    let mut bullet = 0;
    for cand in wide.bullets_over(&lw) {
        let s = wide.sum(&cand, &lb);
        if elementary_length(&wide, &s, &lb) == Some(delta) {
            bullet += 1;
        }
    }
    let floor = wide.pi_mul(&lb);
    let basis = wide.quotient_basis(&floor, &lb);
    let mut circ = 0;
    wide.for_each_between(&floor, &basis, wide.n() - wide.r(), &mut |cand| {
        if wide.is_circ(&cand) {
            let meet = wide.intersect(&lw, &cand);
            if elementary_length(&wide, &lw, &meet) == Some(delta) {
                circ += 1;
            }
        }
    });
    Ok((bullet, circ))
}

/// Mixed counts at the first circ `L` (in normal-form order) of the
/// `m = 2` window with `γ(L) = γ`.
pub fn mixed_counts(q: u32, n: usize, delta: usize, gamma_target: usize) -> Result<(u64, u64)> {
    if n.is_multiple_of(2) {
        return domain("mixed counts need odd N");
    }
    if delta > n / 2 {
        return domain(format!("δ = {delta} exceeds ⌊N/2⌋"));
    }
    let win = Window::new(q, n, 2)?;
    let l = enumerate_window(q, n)?
        .into_iter()
        .find(|l| win.is_circ(l) && gamma(l) == Some(gamma_target));
    match l {
        Some(l) => mixed_counts_for(&l, delta),
        None => domain(format!("no self-dual lattice with γ = {gamma_target}")),
    }
}

/// Closed forms `(q^{t(t+2)}, q^{t²})·[r−γ choose t]_{q²}` with `t = δ − γ`,
/// and `(0, 0)` when `γ > δ`.
pub fn mixed_closed_form(q: u32, r: usize, delta: usize, gamma: usize) -> Result<(BigInt, BigInt)> {
    if gamma > delta {
        return Ok((BigInt::default(), BigInt::default()));
    }
    let t = (delta - gamma) as u32;
    let qb = BigInt::from(q);
    let binom = q_binomial((r - gamma.min(r)) as i64, t as i64, QBase::QSquared)?
        .eval_integer(&qb)
        .expect("polynomial");
    Ok((qb.pow(t * (t + 2)) * &binom, qb.pow(t * t) * binom))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_lattices_classify() {
        for q in [2, 3] {
            for n in 1..=4 {
                let w = Window::new(q, n, 2).unwrap();
                assert_eq!(w.classify(&w.standard_circ()), LatticeKind::Circ);
                assert_eq!(w.dual(&w.standard_circ()), w.standard_circ());
                if n >= 2 {
                    assert_eq!(w.classify(&w.standard_bullet()), LatticeKind::Bullet);
                    assert_eq!(w.classify(&w.scaled_standard(-1).unwrap()), LatticeKind::Other);
                }
            }
        }
    }

    #[test]
    fn window_sizes() {
        let expect = [(2, 1, 3u64), (2, 2, 33), (2, 3, 1179), (3, 1, 3), (3, 2, 113)];
        for (q, n, c) in expect {
            assert_eq!(window_size(q, n), BigInt::from(c));
            assert_eq!(enumerate_window(q, n).unwrap().len() as u64, c);
        }
        assert!(matches!(enumerate_window(3, 4), Err(Error::Resource(_))));
    }

    #[test]
    fn spec_bullet_counts() {
        let w = Window::new(2, 2, 2).unwrap();
        let base = w.standard_circ();
        assert_eq!(count_bullet_between(&base, &base).unwrap(), 3);
        let far = w.standard_circ_at(1).unwrap();
        assert_eq!(w.disc(&base, &far), 2);
        assert_eq!(count_bullet_between(&base, &far).unwrap(), 1);
        let w3 = Window::new(2, 3, 2).unwrap();
        let b3 = w3.standard_circ();
        assert_eq!(count_bullet_between(&b3, &b3).unwrap(), 9);
        assert!(count_bullet_between(&base, &w.scaled_standard(1).unwrap()).is_err());
    }

    #[test]
    fn mixed_spec_examples() {
        assert_eq!(mixed_counts(2, 3, 1, 0).unwrap().0, 8);
        assert_eq!(mixed_counts(2, 3, 1, 1).unwrap().0, 1);
        assert_eq!(mixed_counts(2, 3, 0, 1).unwrap(), (0, 0));
    }
}
