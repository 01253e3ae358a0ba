//! Integer chains: sums of square-free monomials.
//!
//! A graph is encoded as the sum of its simplices, one variable per vertex.
//! Multiplying the encodings of two graphs in separate variable namespaces
//! and decoding the result by divisibility gives their product graph.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{Graph, Simplex};
use crate::topology;

/// A variable: the `index`-th generator of a namespace. Each factor of a
/// product lives in its own namespace.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    pub namespace: u32,
    pub index: u32,
}

impl Var {
    pub fn new(namespace: u32, index: u32) -> Self {
        Var { namespace, index }
    }
}

/// Namespaces print as bijective base-26 letters (`a`..`z`, `aa`, ...).
pub fn namespace_name(mut ns: u32) -> String {
    let mut buf = Vec::new();
    loop {
        buf.push(b'a' + (ns % 26) as u8);
        if ns < 26 {
            break;
        }
        ns = ns / 26 - 1;
    }
    buf.reverse();
    String::from_utf8(buf).unwrap()
}

pub fn parse_namespace(s: &str) -> Option<u32> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_lowercase()) {
        return None;
    }
    let mut n: u64 = 0;
    for b in s.bytes() {
        n = n.checked_mul(26)?.checked_add(u64::from(b - b'a') + 1)?;
    }
    u32::try_from(n - 1).ok()
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", namespace_name(self.namespace), self.index)
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let split = s.find(|c: char| c.is_ascii_digit()).unwrap_or(s.len());
        let (ns, idx) = s.split_at(split);
        let bad = || Error::InvalidChain(format!("bad variable `{s}`"));
        let namespace = parse_namespace(ns).ok_or_else(bad)?;
        if idx.is_empty() || !idx.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let index = idx.parse().map_err(|_| bad())?;
        Ok(Var { namespace, index })
    }
}

/// Square-free product of distinct variables, kept sorted. Monomials order
/// by degree, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<Var>);

impl Monomial {
    /// Fails on an empty or repeated variable list.
    pub fn new(mut vars: Vec<Var>) -> Result<Self> {
        vars.sort_unstable();
        if vars.is_empty() || vars.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidChain(String::from("monomial must be a nonempty product of distinct variables")));
        }
        Ok(Monomial(vars))
    }

    pub fn var(v: Var) -> Self {
        Monomial(alloc::vec![v])
    }

    pub fn vars(&self) -> &[Var] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        if self.0.len() > other.0.len() {
            return false;
        }
        let mut it = other.0.iter();
        self.0.iter().all(|v| it.any(|w| w == v))
    }

    pub fn contains(&self, v: Var) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// The monomial with `v` removed, `None` if nothing is left.
    pub fn without(&self, v: Var) -> Option<Monomial> {
        let rest: Vec<Var> = self.0.iter().copied().filter(|&w| w != v).collect();
        (!rest.is_empty()).then_some(Monomial(rest))
    }

    fn times(&self, other: &Monomial) -> Monomial {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        v.sort_unstable();
        Monomial(v)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Nonzero coefficient times a monomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Term {
    pub coefficient: i64,
    pub monomial: Monomial,
}

impl Term {
    pub fn new(coefficient: i64, monomial: Monomial) -> Self {
        Term { coefficient, monomial }
    }

    /// Monomial divides monomial and coefficient divides coefficient.
    pub fn divides(&self, other: &Term) -> bool {
        self.monomial.divides(&other.monomial)
            && self.coefficient != 0
            && other.coefficient.checked_rem(self.coefficient).is_none_or(|r| r == 0)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*{}", self.coefficient, self.monomial)
    }
}

/// A finite integer combination of monomials, like terms merged and zero
/// coefficients removed.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Chain {
    terms: BTreeMap<Monomial, i64>,
}

impl fmt::Debug for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Chain({self})")
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, &c)) in self.terms.iter().enumerate() {
            match (i, c < 0) {
                (0, false) => write!(f, "{c}*{m}")?,
                (0, true) => write!(f, "-{}*{m}", c.unsigned_abs())?,
                (_, false) => write!(f, " + {c}*{m}")?,
                (_, true) => write!(f, " - {}*{m}", c.unsigned_abs())?,
            }
        }
        Ok(())
    }
}

/// Parses the [`Display`](fmt::Display) form back, e.g.
/// `3*a1 + 5*b2 - 1*a1.a2`. A missing coefficient means 1 and `0` is the
/// zero chain.
impl FromStr for Chain {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chain = Chain::zero();
        if s == "0" {
            return Ok(chain);
        }
        let bad = |why: &str| Error::InvalidChain(format!("{why} in `{s}`"));
        let mut rest = s;
        let mut negative = false;
        if let Some(r) = rest.strip_prefix('-') {
            negative = true;
            rest = r;
        }
        loop {
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let term = rest[..end].trim();
            if term.is_empty() {
                return Err(bad("empty term"));
            }
            let (coef, mono) = match term.split_once('*') {
                Some((c, m)) => (c.trim(), m.trim()),
                None => ("1", term),
            };
            if coef.is_empty() || !coef.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad("bad coefficient"));
            }
            let magnitude: i128 = coef.parse().map_err(|_| Error::Overflow)?;
            let value = i64::try_from(if negative { -magnitude } else { magnitude }).map_err(|_| Error::Overflow)?;
            let vars = mono.split('.').map(|v| v.trim().parse()).collect::<Result<Vec<Var>>>()?;
            chain.add_term(value, Monomial::new(vars)?)?;
            if end == rest.len() {
                return Ok(chain);
            }
            negative = rest.as_bytes()[end] == b'-';
            rest = &rest[end + 1..];
        }
    }
}

impl Chain {
    pub fn zero() -> Self {
        Chain::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = Term>) -> Result<Self> {
        let mut c = Chain::zero();
        for t in terms {
            c.add_term(t.coefficient, t.monomial)?;
        }
        Ok(c)
    }

    pub fn add_term(&mut self, coefficient: i64, monomial: Monomial) -> Result<()> {
        let e = self.terms.entry(monomial.clone()).or_insert(0);
        *e = e.checked_add(coefficient).ok_or(Error::Overflow)?;
        if *e == 0 {
            self.terms.remove(&monomial);
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn coefficient(&self, m: &Monomial) -> i64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    /// Terms in canonical monomial order.
    pub fn terms(&self) -> Vec<Term> {
        self.terms.iter().map(|(m, &c)| Term::new(c, m.clone())).collect()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn namespaces(&self) -> BTreeSet<u32> {
        self.terms.keys().flat_map(|m| m.0.iter().map(|v| v.namespace)).collect()
    }

    /// Sum of all simplices of `g`, vertex `i` becoming `Var(namespace, i)`.
    pub fn encode(g: &Graph, namespace: u32) -> Chain {
        let terms = g
            .simplices()
            .into_iter()
            .map(|s| (simplex_monomial(&s, namespace), 1))
            .collect();
        Chain { terms }
    }

    /// Product of chains over disjoint namespaces.
    pub fn multiply(&self, other: &Chain) -> Result<Chain> {
        if let Some(&ns) = self.namespaces().intersection(&other.namespaces()).next() {
            return Err(Error::SharedNamespace(ns));
        }
        let mut out = Chain::zero();
        for (m, &c) in &self.terms {
            for (n, &d) in &other.terms {
                let coeff = c.checked_mul(d).ok_or(Error::Overflow)?;
                out.add_term(coeff, m.times(n))?;
            }
        }
        Ok(out)
    }

    /// Sum of signed facets; degree-one terms map to zero.
    pub fn boundary(&self) -> Result<Chain> {
        let mut out = Chain::zero();
        for (m, &c) in &self.terms {
            if m.degree() < 2 {
                continue;
            }
            for i in 0..m.degree() {
                let mut vars = m.0.clone();
                vars.remove(i);
                let sign = if i % 2 == 0 { c } else { c.checked_neg().ok_or(Error::Overflow)? };
                out.add_term(sign, Monomial(vars))?;
            }
        }
        Ok(out)
    }

    /// `-f(-1, ..., -1)`: coefficients weighted by `(-1)^(degree - 1)`.
    pub fn euler(&self) -> i64 {
        self.terms
            .iter()
            .map(|(m, &c)| if m.degree() % 2 == 1 { c } else { -c })
            .sum()
    }

    /// Sum of coefficient products over shared monomials.
    pub fn inner(&self, other: &Chain) -> i64 {
        self.terms.iter().map(|(m, &c)| c * other.coefficient(m)).sum()
    }

    /// Terms of the chain that divide or are divided by `t`, `t` excluded.
    pub fn sphere(&self, t: &Term) -> Result<Vec<Term>> {
        if self.coefficient(&t.monomial) != t.coefficient || t.coefficient == 0 {
            return Err(Error::TermNotInChain);
        }
        Ok(self
            .terms()
            .into_iter()
            .filter(|u| u != t && (u.divides(t) || t.divides(u)))
            .collect())
    }

    /// Divisibility graph of the terms in canonical order.
    pub fn decode(&self) -> Graph {
        decode(&self.terms())
    }

    /// Dimension computed from the algebra alone: the degree-one terms are
    /// the vertices and the sphere of `x` collects every multiple of `x`
    /// divided by `x`.
    pub fn small_dimension(&self) -> BigRational {
        let monos: Vec<Monomial> = self.terms.keys().cloned().collect();
        small_dim(&monos, &mut BTreeMap::new())
    }

    /// Inductive dimension of the decoded graph.
    pub fn large_dimension(&self) -> BigRational {
        topology::inductive_dimension(&self.decode()).total
    }

    /// Some vertex `x` has a contractible link (multiples of `x` divided by
    /// `x`) and leaves a contractible remainder once `x` and its multiples
    /// are removed. A single vertex is contractible, no vertex is not.
    pub fn is_contractible(&self) -> bool {
        let monos: Vec<Monomial> = self.terms.keys().cloned().collect();
        chain_contractible(monos, &mut BTreeMap::new())
    }
}

fn simplex_monomial(s: &Simplex, namespace: u32) -> Monomial {
    Monomial(s.vertices().iter().map(|&v| Var::new(namespace, v as u32)).collect())
}

/// Divisibility graph of a term list, one vertex per entry in the given
/// order, edge when one term divides the other.
pub fn decode(terms: &[Term]) -> Graph {
    let n = terms.len();
    let mut adj = alloc::vec![Vec::new(); n];
    for i in 0..n {
        for j in i + 1..n {
            if terms[i].divides(&terms[j]) || terms[j].divides(&terms[i]) {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    let mut seen: BTreeMap<String, usize> = BTreeMap::new();
    let labels = terms
        .iter()
        .map(|t| {
            let base = if t.coefficient == 1 { format!("{}", t.monomial) } else { format!("{t}") };
            let k = seen.entry(base.clone()).or_insert(0);
            *k += 1;
            if *k == 1 {
                base
            } else {
                format!("{base}#{k}")
            }
        })
        .collect();
    Graph::from_adjacency(labels, adj)
}

fn vertices_of(monos: &[Monomial]) -> Vec<Var> {
    monos.iter().filter(|m| m.degree() == 1).map(|m| m.0[0]).collect()
}

fn link(monos: &[Monomial], x: Var) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = monos
        .iter()
        .filter(|m| m.degree() > 1 && m.contains(x))
        .filter_map(|m| m.without(x))
        .collect();
    out.sort();
    out.dedup();
    out
}

fn small_dim(monos: &[Monomial], memo: &mut BTreeMap<Vec<Monomial>, BigRational>) -> BigRational {
    if let Some(d) = memo.get(monos) {
        return d.clone();
    }
    let verts = vertices_of(monos);
    let d = if verts.is_empty() {
        -BigRational::one()
    } else {
        let mut sum = BigRational::zero();
        for &x in &verts {
            sum += BigRational::one() + small_dim(&link(monos, x), memo);
        }
        sum / BigRational::from_integer(BigInt::from(verts.len()))
    };
    memo.insert(monos.to_vec(), d.clone());
    d
}

fn chain_contractible(monos: Vec<Monomial>, memo: &mut BTreeMap<Vec<Monomial>, bool>) -> bool {
    let verts = vertices_of(&monos);
    match verts.len() {
        0 => return false,
        1 => return true,
        _ => {}
    }
    if let Some(&b) = memo.get(&monos) {
        return b;
    }
    let mut result = false;
    for &x in &verts {
        let l = link(&monos, x);
        if !chain_contractible(l, memo) {
            continue;
        }
        let rest: Vec<Monomial> = monos.iter().filter(|m| !m.contains(x)).cloned().collect();
        if chain_contractible(rest, memo) {
            result = true;
            break;
        }
    }
    memo.insert(monos, result);
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    fn v(ns: u32, i: u32) -> Var {
        Var::new(ns, i)
    }

    fn mono(vs: &[(u32, u32)]) -> Monomial {
        Monomial::new(vs.iter().map(|&(a, b)| v(a, b)).collect()).unwrap()
    }

    fn chain(ts: &[(i64, &[(u32, u32)])]) -> Chain {
        Chain::from_terms(ts.iter().map(|&(c, m)| Term::new(c, mono(m)))).unwrap()
    }

    #[test]
    fn var_names_round_trip() {
        for ns in [0, 1, 25, 26, 27, 701, 702, 10_000] {
            assert_eq!(parse_namespace(&namespace_name(ns)), Some(ns));
        }
        assert_eq!(namespace_name(26), "aa");
        assert_eq!("b12".parse::<Var>().unwrap(), v(1, 12));
        assert!("12".parse::<Var>().is_err());
        assert!("ab".parse::<Var>().is_err());
    }

    #[test]
    fn text_round_trip() {
        let c = chain(&[(3, &[(0, 1)]), (5, &[(1, 2)]), (-1, &[(0, 1), (0, 2)])]);
        let text = alloc::format!("{c}");
        assert_eq!(text, "3*a1 + 5*b2 - 1*a1.a2");
        assert_eq!(text.parse::<Chain>().unwrap(), c);
        assert_eq!("a1 - a2 + 2*a1".parse::<Chain>().unwrap(), chain(&[(3, &[(0, 1)]), (-1, &[(0, 2)])]));
        assert_eq!("0".parse::<Chain>().unwrap(), Chain::zero());
        assert_eq!("-9223372036854775808*a1".parse::<Chain>().unwrap().coefficient(&mono(&[(0, 1)])), i64::MIN);
        for bad in ["", "3*", "a1 +", "x*a1", "3*a1.a1", "a1 ++ a2", "99999999999999999999*a1"] {
            assert!(bad.parse::<Chain>().is_err(), "{bad}");
        }
    }

    #[test]
    fn like_terms_merge_and_cancel() {
        let c = chain(&[(2, &[(0, 0)]), (-2, &[(0, 0)]), (3, &[(0, 1)])]);
        assert_eq!(c.len(), 1);
        assert_eq!(alloc::format!("{c}"), "3*a1");
        assert!(Monomial::new(alloc::vec![v(0, 1), v(0, 1)]).is_err());
    }

    #[test]
    fn encode_k3_is_seven_terms_with_euler_one() {
        let f = Chain::encode(&named::complete(3), 0);
        assert_eq!(f.len(), 7);
        assert_eq!(f.euler(), 1);
        let g = f.decode();
        assert_eq!(g.vertex_count(), 7);
        assert_eq!(g.edge_count(), 12);
    }

    #[test]
    fn star_boundary() {
        // x, y, z leaves; w centre
        let s = Chain::encode(&named::star(4).unwrap(), 0);
        assert_eq!(s.len(), 7);
        let b = s.boundary().unwrap();
        assert_eq!(b, chain(&[(3, &[(0, 3)]), (-1, &[(0, 0)]), (-1, &[(0, 1)]), (-1, &[(0, 2)])]));
        let tri = chain(&[(1, &[(0, 0), (0, 1), (0, 2)])]);
        assert_eq!(
            tri.boundary().unwrap(),
            chain(&[(1, &[(0, 1), (0, 2)]), (-1, &[(0, 0), (0, 2)]), (1, &[(0, 0), (0, 1)])])
        );
        assert!(Chain::encode(&named::complete(4), 0).boundary().unwrap().boundary().unwrap().is_zero());
    }

    #[test]
    fn divisibility_respects_coefficients() {
        // 3x + 5y + 10xy: only 5y and 10xy are joined
        let c = chain(&[(3, &[(0, 0)]), (5, &[(0, 1)]), (10, &[(0, 0), (0, 1)])]);
        let g = c.decode();
        assert_eq!(g.edges(), alloc::vec![(1, 2)]);
        // 2x - 3x + 4xy + y, given as an uncombined list
        let terms = alloc::vec![
            Term::new(2, mono(&[(0, 0)])),
            Term::new(-3, mono(&[(0, 0)])),
            Term::new(4, mono(&[(0, 0), (0, 1)])),
            Term::new(1, mono(&[(0, 1)])),
        ];
        let g = decode(&terms);
        assert_eq!(g.edges(), alloc::vec![(0, 2), (2, 3)]);
    }

    #[test]
    fn sphere_of_a_term() {
        let f = Chain::encode(&named::complete(3), 0);
        let t = Term::new(1, mono(&[(0, 0)]));
        let s = f.sphere(&t).unwrap();
        assert_eq!(s.len(), 3);
        assert!(f.sphere(&Term::new(2, mono(&[(0, 0)]))).is_err());
    }

    #[test]
    fn shared_namespace_is_rejected() {
        let f = Chain::encode(&named::complete(2), 0);
        assert_eq!(f.multiply(&f), Err(Error::SharedNamespace(0)));
    }

    #[test]
    fn product_euler_picks_up_a_sign() {
        let f = Chain::encode(&named::complete(2), 0);
        let g = Chain::encode(&named::house(), 1);
        let fg = f.multiply(&g).unwrap();
        assert_eq!(fg.euler(), -f.euler() * g.euler());
        assert_eq!(fg.decode().euler_characteristic(), 0);
    }

    #[test]
    fn small_dimension_of_encodings() {
        let f = Chain::encode(&named::house(), 0);
        assert_eq!(f.small_dimension(), BigRational::new(22.into(), 15.into()));
        assert_eq!(Chain::zero().small_dimension(), -BigRational::one());
    }

    #[test]
    fn chain_contractibility() {
        assert!(Chain::encode(&named::path(4), 0).is_contractible());
        assert!(!Chain::encode(&named::cycle(4).unwrap(), 0).is_contractible());
        assert!(!chain(&[(1, &[(0, 0)]), (1, &[(0, 1)])]).is_contractible());
        assert!(!Chain::zero().is_contractible());
    }
}
