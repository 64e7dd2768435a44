use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{domain, Result};

/// Index of a field element: its coefficient vector in base `p`.
pub type Elem = u16;

/// Largest field order handled by the table arithmetic.
pub const MAX_ORDER: u32 = 256;

/// The finite field `GF(p^n)` with log/antilog multiplication tables.
pub struct GaloisField {
    p: u32,
    n: u32,
    order: u32,
    add: Vec<Elem>,
    neg: Vec<Elem>,
    exp: Vec<Elem>,
    log: Vec<u32>,
}

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.p, self.n)
    }
}

fn digits(mut v: u32, p: u32, n: u32) -> Vec<u32> {
    (0..n)
        .map(|_| {
            let d = v % p;
            v /= p;
            d
        })
        .collect()
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &x| acc * p + x)
}

/// Splits a prime power into `(p, k)`; `None` otherwise.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut k = 0;
    let mut v = q;
    while v.is_multiple_of(p) {
        v /= p;
        k += 1;
    }
    (v == 1).then_some((p, k))
}

type FieldCache = HashMap<(u32, u32), Arc<GaloisField>>;

impl GaloisField {
    /// `GF(p^n)` for prime `p`; the order must not exceed [`MAX_ORDER`].
    pub fn new(p: u32, n: u32) -> Result<Arc<GaloisField>> {
        static CACHE: OnceLock<Mutex<FieldCache>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(f) = cache.lock().expect("cache poisoned").get(&(p, n)) {
            return Ok(f.clone());
        }
        if prime_power(p) != Some((p, 1)) || n == 0 {
            return domain(format!("GF({p}^{n}) needs a prime p and n >= 1"));
        }
        let order = p.checked_pow(n).filter(|&o| o <= MAX_ORDER);
        let Some(order) = order else {
            return domain(format!("field order {p}^{n} exceeds {MAX_ORDER}"));
        };
        let f = Arc::new(Self::build(p, n, order));
        cache.lock().expect("cache poisoned").insert((p, n), f.clone());
        Ok(f)
    }

    /// The field with `q` elements.
    pub fn of_order(q: u32) -> Result<Arc<GaloisField>> {
        match prime_power(q) {
            Some((p, k)) => Self::new(p, k),
            None => domain(format!("{q} is not a prime power")),
        }
    }

    fn build(p: u32, n: u32, order: u32) -> GaloisField {
        let o = order as usize;
        let mut add = vec![0; o * o];
        let mut neg = vec![0; o];
        for a in 0..order {
            let da = digits(a, p, n);
            let nd: Vec<u32> = da.iter().map(|&x| (p - x) % p).collect();
            neg[a as usize] = undigits(&nd, p) as Elem;
            for b in 0..order {
                let db = digits(b, p, n);
                let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a as usize * o + b as usize] = undigits(&s, p) as Elem;
            }
        }
        // Search monic degree-n polynomials for one where x has order p^n − 1.
        for tail in 0..order {
            let low = digits(tail, p, n);
            if n > 1 && low[0] == 0 {
                continue;
            }
            if let Some((exp, log)) = Self::try_primitive(p, n, order, &low) {
                return GaloisField { p, n, order, add, neg, exp, log };
            }
        }
        unreachable!("a primitive polynomial always exists")
    }

    /// Powers of `x` modulo `x^n + low(x)`, if `x` generates the unit group.
    fn try_primitive(p: u32, n: u32, order: u32, low: &[u32]) -> Option<(Vec<Elem>, Vec<u32>)> {
        let units = order - 1;
        let mut exp = vec![0 as Elem; 2 * units as usize];
        let mut log = vec![u32::MAX; order as usize];
        let mut cur: Vec<u32> = {
            let mut v = vec![0; n as usize];
            v[0] = 1;
            v
        };
        for i in 0..units {
            let idx = undigits(&cur, p);
            if log[idx as usize] != u32::MAX {
                return None;
            }
            log[idx as usize] = i;
            exp[i as usize] = idx as Elem;
            exp[(i + units) as usize] = idx as Elem;
            // Multiply by x and reduce: x^n = −low(x).
            let mut next = vec![0; n as usize];
            if n == 1 {
                next[0] = cur[0] * ((p - low[0] % p) % p) % p;
            } else {
                let top = cur[n as usize - 1];
                for j in 0..n as usize {
                    let shifted = if j == 0 { 0 } else { cur[j - 1] };
                    next[j] = (shifted + p * p - top * low[j] % p) % p;
                }
            }
            cur = next;
        }
        let back = undigits(&cur, p);
        (back == 1).then_some((exp, log))
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn zero(&self) -> Elem {
        0
    }

    pub fn one(&self) -> Elem {
        1
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.order as Elem
    }

    /// A generator of the multiplicative group.
    pub fn primitive(&self) -> Elem {
        self.exp[1 % self.exp.len().max(1)]
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a as usize * self.order as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
    }

    pub fn inv(&self, a: Elem) -> Option<Elem> {
        if a == 0 {
            return None;
        }
        let units = self.order - 1;
        Some(self.exp[((units - self.log[a as usize]) % units) as usize])
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let units = (self.order - 1) as u64;
        self.exp[((self.log[a as usize] as u64 * (e % units)) % units) as usize]
    }

    /// The integer `k` as a field element.
    pub fn from_int(&self, k: i64) -> Elem {
        let r = k.rem_euclid(self.p as i64) as u32;
        r as Elem
    }
}

/// The residue field of order `q²` with its conjugation `x ↦ x^q`.
#[derive(Clone, Debug)]
pub struct Fq2 {
    q: u32,
    field: Arc<GaloisField>,
}

impl Fq2 {
    pub fn new(q: u32) -> Result<Fq2> {
        if prime_power(q).is_none() {
            return domain(format!("{q} is not a prime power"));
        }
        let Some(q2) = q.checked_mul(q) else {
            return domain(format!("q = {q} is too large"));
        };
        Ok(Fq2 { q, field: GaloisField::of_order(q2)? })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn field(&self) -> &Arc<GaloisField> {
        &self.field
    }

    pub fn conj(&self, a: Elem) -> Elem {
        self.field.pow(a, self.q as u64)
    }
}

impl std::ops::Deref for Fq2 {
    type Target = GaloisField;

    fn deref(&self) -> &GaloisField {
        &self.field
    }
}
