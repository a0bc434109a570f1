//! The group-spec mini-language and the normal-form constructions behind it.

use std::fmt;

use super::{Elem, FiniteGroup};
use crate::error::{Error, Result};
use crate::zmod::gcd;

const DEFAULT_ORDER_CAP: usize = 4096;

/// Order cap from `DESCENT3_ORDER_CAP`, falling back to 4096.
pub fn default_order_cap() -> usize {
    std::env::var("DESCENT3_ORDER_CAP")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .filter(|&c: &usize| c > 0)
        .unwrap_or(DEFAULT_ORDER_CAP)
}

/// Parsed group spec.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(u64),
    Elementary { p: u64, n: u32 },
    /// Dihedral group of the given order `2n`.
    Dihedral(u64),
    /// Generalized quaternion group of the given order `4n`.
    Quaternion(u64),
    Heisenberg(u64),
    Modular(u64),
    Direct(Box<GroupSpec>, Box<GroupSpec>),
    Semidirect { m: u64, n: u64, k: u64 },
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::Elementary { p, n } => write!(f, "elementary:{p}:{n}"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupSpec::Quaternion(n) => write!(f, "quaternion:{n}"),
            GroupSpec::Heisenberg(p) => write!(f, "heisenberg:{p}"),
            GroupSpec::Modular(p) => write!(f, "modular:{p}"),
            GroupSpec::Direct(a, b) => write!(f, "direct:{a},{b}"),
            GroupSpec::Semidirect { m, n, k } => write!(f, "semidirect:{m},{n},{k}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

struct Parser<'a> {
    src: &'a str,
    rest: &'a str,
}

impl<'a> Parser<'a> {
    fn err(&self, reason: impl Into<String>) -> Error {
        Error::Parse {
            spec: self.src.to_string(),
            reason: reason.into(),
        }
    }

    fn expect(&mut self, tok: &str) -> Result<()> {
        match self.rest.strip_prefix(tok) {
            Some(r) => {
                self.rest = r;
                Ok(())
            }
            None => Err(self.err(format!("expected `{tok}`"))),
        }
    }

    fn number(&mut self) -> Result<u64> {
        let end = self
            .rest
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.rest.len());
        if end == 0 {
            return Err(self.err("expected a number"));
        }
        let (digits, r) = self.rest.split_at(end);
        self.rest = r;
        digits.parse().map_err(|_| self.err("number out of range"))
    }

    fn prime(&mut self) -> Result<u64> {
        let p = self.number()?;
        if !is_prime(p) {
            return Err(self.err(format!("{p} is not prime")));
        }
        Ok(p)
    }

    fn spec(&mut self) -> Result<GroupSpec> {
        let end = self.rest.find(':').ok_or_else(|| self.err("missing `:`"))?;
        let (kind, r) = self.rest.split_at(end);
        self.rest = &r[1..];
        match kind {
            "cyclic" => {
                let n = self.number()?;
                if n == 0 {
                    return Err(self.err("cyclic order must be positive"));
                }
                Ok(GroupSpec::Cyclic(n))
            }
            "elementary" => {
                let p = self.prime()?;
                self.expect(":")?;
                let n = self.number()?;
                let n = u32::try_from(n).map_err(|_| self.err("rank out of range"))?;
                Ok(GroupSpec::Elementary { p, n })
            }
            "dihedral" => {
                let n = self.number()?;
                if n < 2 || n % 2 != 0 {
                    return Err(self.err("dihedral order must be even and at least 2"));
                }
                Ok(GroupSpec::Dihedral(n))
            }
            "quaternion" => {
                let n = self.number()?;
                if n < 8 || n % 4 != 0 {
                    return Err(self.err("quaternion order must be a multiple of 4, at least 8"));
                }
                Ok(GroupSpec::Quaternion(n))
            }
            "heisenberg" => Ok(GroupSpec::Heisenberg(self.prime()?)),
            "modular" => Ok(GroupSpec::Modular(self.prime()?)),
            "direct" => {
                let a = self.spec()?;
                self.expect(",")?;
                let b = self.spec()?;
                Ok(GroupSpec::Direct(Box::new(a), Box::new(b)))
            }
            "semidirect" => {
                let m = self.number()?;
                self.expect(",")?;
                let n = self.number()?;
                self.expect(",")?;
                let k = self.number()?;
                if m == 0 || n == 0 {
                    return Err(self.err("semidirect factors must be nontrivial orders"));
                }
                Ok(GroupSpec::Semidirect { m, n, k })
            }
            other => Err(self.err(format!("unknown group family `{other}`"))),
        }
    }
}

impl GroupSpec {
    pub fn parse(s: &str) -> Result<GroupSpec> {
        let s = s.trim();
        let mut p = Parser { src: s, rest: s };
        let spec = p.spec()?;
        if !p.rest.is_empty() {
            return Err(p.err(format!("trailing input `{}`", p.rest)));
        }
        Ok(spec)
    }

    /// Group order, saturating on overflow.
    pub fn order(&self) -> u128 {
        match self {
            GroupSpec::Cyclic(n) | GroupSpec::Dihedral(n) | GroupSpec::Quaternion(n) => *n as u128,
            GroupSpec::Elementary { p, n } => (*p as u128).saturating_pow(*n),
            GroupSpec::Heisenberg(p) | GroupSpec::Modular(p) => (*p as u128).saturating_pow(3),
            GroupSpec::Direct(a, b) => a.order().saturating_mul(b.order()),
            GroupSpec::Semidirect { m, n, .. } => *m as u128 * *n as u128,
        }
    }

    fn check_action(&self) -> Result<()> {
        match self {
            GroupSpec::Semidirect { m, n, k } => {
                let (m, n, k) = (*m, *n, *k);
                let km = k % m;
                let ok = gcd(km, m) == 1 && {
                    let mut acc = 1 % m;
                    for _ in 0..n {
                        acc = (acc as u128 * km as u128 % m as u128) as u64;
                    }
                    acc == 1 % m
                };
                if ok {
                    Ok(())
                } else {
                    Err(Error::ActionConstraint {
                        m: m as usize,
                        n: n as usize,
                        k: k as usize,
                    })
                }
            }
            GroupSpec::Direct(a, b) => {
                a.check_action()?;
                b.check_action()
            }
            _ => Ok(()),
        }
    }

    /// Builds the group, refusing anything above `cap`.
    pub fn build(&self, cap: usize) -> Result<FiniteGroup> {
        self.check_action()?;
        let order = self.order();
        if order > cap as u128 {
            return Err(Error::OrderCap {
                order: usize::try_from(order).unwrap_or(usize::MAX),
                cap,
            });
        }
        Ok(self.build_unchecked())
    }

    fn build_unchecked(&self) -> FiniteGroup {
        let name = Some(self.to_string());
        let built = match *self {
            GroupSpec::Cyclic(n) => cyclic(n as usize, name),
            GroupSpec::Elementary { p, n } => elementary(p as usize, n, name),
            GroupSpec::Dihedral(n) => dihedral(n as usize / 2, name),
            GroupSpec::Quaternion(n) => quaternion(n as usize / 4, name),
            GroupSpec::Heisenberg(p) => heisenberg(p as usize, name),
            GroupSpec::Modular(p) => modular(p as usize, name),
            GroupSpec::Semidirect { m, n, k } => semidirect(m as usize, n as usize, k as usize, name),
            GroupSpec::Direct(ref a, ref b) => {
                let ga = a.build_unchecked();
                let gb = b.build_unchecked();
                Ok(ga.direct_product(&gb, name))
            }
        };
        built.expect("normal-form constructions satisfy the group axioms")
    }
}

/// Parses and builds a group under the default order cap.
pub fn make_group(spec: &str) -> Result<FiniteGroup> {
    make_group_with_cap(spec, default_order_cap())
}

pub fn make_group_with_cap(spec: &str, cap: usize) -> Result<FiniteGroup> {
    GroupSpec::parse(spec)?.build(cap)
}

fn power_label(sym: &str, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => sym.to_string(),
        _ => format!("{sym}^{e}"),
    }
}

fn word_label(parts: &[(&str, usize)]) -> String {
    let s: String = parts.iter().map(|&(sym, e)| power_label(sym, e)).collect();
    if s.is_empty() {
        "1".into()
    } else {
        s
    }
}

fn nonzero(gens: &[usize]) -> Vec<Elem> {
    gens.iter().filter(|&&g| g != 0).map(|&g| g as Elem).collect()
}

fn cyclic(n: usize, name: Option<String>) -> Result<FiniteGroup> {
    let labels = (0..n).map(|i| word_label(&[("a", i)])).collect();
    FiniteGroup::from_fn(n, |x, y| (x + y) % n, nonzero(&[1 % n]), Some(labels), name)
}

/// `(Z/p)^n`, coordinates little-endian: index `sum x_i p^i`.
fn elementary(p: usize, n: u32, name: Option<String>) -> Result<FiniteGroup> {
    let order = p.pow(n);
    let digits = |mut x: usize| {
        (0..n)
            .map(|_| {
                let d = x % p;
                x /= p;
                d
            })
            .collect::<Vec<_>>()
    };
    let labels = (0..order)
        .map(|x| {
            let d: Vec<String> = digits(x).iter().map(|d| d.to_string()).collect();
            format!("({})", d.join(","))
        })
        .collect();
    let gens: Vec<usize> = (0..n).map(|i| p.pow(i)).collect();
    FiniteGroup::from_fn(
        order,
        |x, y| {
            let (dx, dy) = (digits(x), digits(y));
            (0..n as usize).rev().fold(0, |acc, i| acc * p + (dx[i] + dy[i]) % p)
        },
        nonzero(&gens),
        Some(labels),
        name,
    )
}

/// Dihedral group of order `2n`: `r^i s^j` at `i + n j`, with `s r s = r^-1`.
fn dihedral(n: usize, name: Option<String>) -> Result<FiniteGroup> {
    let labels = (0..2 * n)
        .map(|x| word_label(&[("r", x % n), ("s", x / n)]))
        .collect();
    FiniteGroup::from_fn(
        2 * n,
        |x, y| {
            let (i, j) = (x % n, x / n);
            let (k, l) = (y % n, y / n);
            let k = if j == 1 { (n - k) % n } else { k };
            (i + k) % n + n * ((j + l) % 2)
        },
        nonzero(&[1 % n, n]),
        Some(labels),
        name,
    )
}

/// Quaternion group of order `4n`: `r^i s^j` at `i + 2n j`, with `s^2 = r^n`, `s^-1 r s = r^-1`.
fn quaternion(n: usize, name: Option<String>) -> Result<FiniteGroup> {
    let h = 2 * n;
    let labels = (0..2 * h)
        .map(|x| word_label(&[("r", x % h), ("s", x / h)]))
        .collect();
    FiniteGroup::from_fn(
        2 * h,
        |x, y| {
            let (i, j) = (x % h, x / h);
            let (k, l) = (y % h, y / h);
            let k = if j == 1 { (h - k) % h } else { k };
            let carry = if j == 1 && l == 1 { n } else { 0 };
            (i + k + carry) % h + h * ((j + l) % 2)
        },
        vec![1, h as Elem],
        Some(labels),
        name,
    )
}

/// Heisenberg group mod `p`: `(x, y, z)` at `x + p y + p^2 z`, with
/// `(x,y,z)(x',y',z') = (x+x', y+y', z+z'+x y')`.
///
/// Generators `r = (1,0,0)`, `s = (0,1,0)`; `t = (0,0,1) = [r, s]` is central.
fn heisenberg(p: usize, name: Option<String>) -> Result<FiniteGroup> {
    let order = p * p * p;
    let split = |v: usize| (v % p, (v / p) % p, v / (p * p));
    let labels = (0..order)
        .map(|v| {
            let (x, y, z) = split(v);
            word_label(&[("r", x), ("s", y), ("t", z)])
        })
        .collect();
    FiniteGroup::from_fn(
        order,
        |a, b| {
            let (x, y, z) = split(a);
            let (x2, y2, z2) = split(b);
            (x + x2) % p + p * ((y + y2) % p) + p * p * ((z + z2 + x * y2) % p)
        },
        vec![1, p as Elem],
        Some(labels),
        name,
    )
}

/// Modular group of order `p^3`: `s^i r^j` at `j + p^2 i`, with `r` of order
/// `p^2`, `s` of order `p` and `s^-1 r s = r^(1+p)`.
fn modular(p: usize, name: Option<String>) -> Result<FiniteGroup> {
    let p2 = p * p;
    let labels = (0..p2 * p)
        .map(|v| word_label(&[("s", v / p2), ("r", v % p2)]))
        .collect();
    // r^j s^k = s^k r^(j (1+p)^k), and (1+p)^k = 1 + k p mod p^2.
    FiniteGroup::from_fn(
        p2 * p,
        |a, b| {
            let (i, j) = (a / p2, a % p2);
            let (k, l) = (b / p2, b % p2);
            let twisted = j * (1 + k * p) % p2;
            (twisted + l) % p2 + p2 * ((i + k) % p)
        },
        vec![1, p2 as Elem],
        Some(labels),
        name,
    )
}

/// `Z/m x| Z/n`: `tau^a sigma^b` at `a + m b`, with `sigma tau sigma^-1 = tau^k`.
fn semidirect(m: usize, n: usize, k: usize, name: Option<String>) -> Result<FiniteGroup> {
    let mut kpow = vec![1 % m; n];
    for b in 1..n {
        kpow[b] = kpow[b - 1] * (k % m) % m;
    }
    let labels = (0..m * n)
        .map(|v| word_label(&[("tau", v % m), ("sigma", v / m)]))
        .collect();
    FiniteGroup::from_fn(
        m * n,
        |x, y| {
            let (a, b) = (x % m, x / m);
            let (c, d) = (y % m, y / m);
            (a + kpow[b] * c) % m + m * ((b + d) % n)
        },
        nonzero(&[1 % m, m % (m * n)]),
        Some(labels),
        name,
    )
}
