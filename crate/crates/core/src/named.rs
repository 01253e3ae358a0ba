//! Registry of named graph families.
//!
//! Vertices are labelled `0..n`. Random families take an explicit seed and
//! draw from ChaCha8, so the same parameters give the same graph on every
//! platform.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn bad(name: &str, reason: &str) -> Error {
    Error::BadParameters { name: name.to_string(), reason: reason.to_string() }
}

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).expect("registry graphs are valid")
}

pub fn complete(n: usize) -> Graph {
    let mut e = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            e.push((i, j));
        }
    }
    build(n, &e)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(bad("cycle", "needs at least 3 vertices"));
    }
    let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(build(n, &e))
}

/// Path on `n` vertices.
pub fn path(n: usize) -> Graph {
    let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    build(n, &e)
}

/// Star on `n` vertices; the centre is the last vertex.
pub fn star(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(bad("star", "needs at least 1 vertex"));
    }
    let c = n - 1;
    let e: Vec<_> = (0..c).map(|i| (i, c)).collect();
    Ok(build(n, &e))
}

/// Cycle `C_n` plus a hub (last vertex) adjacent to all of it.
pub fn wheel(n: usize) -> Result<Graph> {
    let mut e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    if n < 3 {
        return Err(bad("wheel", "rim needs at least 3 vertices"));
    }
    e.extend((0..n).map(|i| (i, n)));
    Ok(build(n + 1, &e))
}

/// Join of `k` copies of the 0-sphere; vertices `2i` and `2i + 1` are
/// antipodal.
pub fn cross_polytope(k: usize) -> Graph {
    let n = 2 * k;
    let mut e = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if i / 2 != j / 2 {
                e.push((i, j));
            }
        }
    }
    build(n, &e)
}

pub fn octahedron() -> Graph {
    cross_polytope(3)
}

pub fn icosahedron() -> Graph {
    let mut e = Vec::new();
    for i in 0..5 {
        let up = 1 + i;
        let up_next = 1 + (i + 1) % 5;
        let low = 6 + i;
        let low_next = 6 + (i + 1) % 5;
        e.push((0, up));
        e.push((up, up_next));
        e.push((low, low_next));
        e.push((up, low));
        e.push((up, low_next));
        e.push((low, 11));
    }
    build(12, &e)
}

/// Square `0-1-2-3` with a roof vertex over the edge `2-3`.
pub fn house() -> Graph {
    build(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (3, 4)])
}

/// `K_m` with a path of `n` extra vertices hanging off its last vertex.
pub fn lollipop(m: usize, n: usize) -> Result<Graph> {
    if m == 0 {
        return Err(bad("lollipop", "clique must be nonempty"));
    }
    let mut e = complete(m).edges();
    for i in 0..n {
        e.push((m - 1 + i, m + i));
    }
    Ok(build(m + n, &e))
}

/// `C_m` with a path of `n` extra vertices hanging off its last vertex.
pub fn tadpole(m: usize, n: usize) -> Result<Graph> {
    let mut e = cycle(m).map_err(|_| bad("tadpole", "cycle needs at least 3 vertices"))?.edges();
    for i in 0..n {
        e.push((m - 1 + i, m + i));
    }
    Ok(build(m + n, &e))
}

/// Cycle `C_n` where vertex `i` carries `rays[i]` pendant vertices.
pub fn sun(rays: &[usize]) -> Result<Graph> {
    let n = rays.len();
    let mut e = cycle(n).map_err(|_| bad("sun", "needs at least 3 ray counts"))?.edges();
    let mut next = n;
    for (i, &r) in rays.iter().enumerate() {
        for _ in 0..r {
            e.push((i, next));
            next += 1;
        }
    }
    Ok(build(next, &e))
}

/// G(n, p) with `p = percent / 100`; pairs are visited in lexicographic
/// order, one draw each.
pub fn erdos_renyi(n: usize, percent: u32, seed: u64) -> Result<Graph> {
    if percent > 100 {
        return Err(bad("erdos_renyi", "percent must be at most 100"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut e = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_range(0..100u32) < percent {
                e.push((i, j));
            }
        }
    }
    Ok(build(n, &e))
}

/// Random recursive tree: vertex `i > 0` attaches to a uniform earlier one.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let e: Vec<_> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
    build(n, &e)
}

fn arg(name: &str, params: &[u64], i: usize, default: Option<u64>) -> Result<usize> {
    match params.get(i).copied().or(default) {
        Some(v) => usize::try_from(v).map_err(|_| bad(name, "parameter too large")),
        None => Err(bad(name, &format!("missing parameter {}", i + 1))),
    }
}

fn arity(name: &str, params: &[u64], max: usize) -> Result<()> {
    if params.len() > max {
        return Err(bad(name, &format!("takes at most {max} parameters")));
    }
    Ok(())
}

/// Looks up a family by name.
///
/// ```
/// let g = kunneth_core::named::named("cycle", &[4]).unwrap();
/// assert_eq!(g.edge_count(), 4);
/// ```
pub fn named(name: &str, params: &[u64]) -> Result<Graph> {
    match name {
        "complete" | "k" => {
            arity(name, params, 1)?;
            Ok(complete(arg(name, params, 0, None)?))
        }
        "cycle" | "c" => {
            arity(name, params, 1)?;
            cycle(arg(name, params, 0, None)?)
        }
        "path" | "line" => {
            arity(name, params, 1)?;
            Ok(path(arg(name, params, 0, None)?))
        }
        "star" => {
            arity(name, params, 1)?;
            star(arg(name, params, 0, None)?)
        }
        "wheel" => {
            arity(name, params, 1)?;
            wheel(arg(name, params, 0, None)?)
        }
        "octahedron" => {
            arity(name, params, 0)?;
            Ok(octahedron())
        }
        "icosahedron" => {
            arity(name, params, 0)?;
            Ok(icosahedron())
        }
        "house" => {
            arity(name, params, 0)?;
            Ok(house())
        }
        "lollipop" => {
            arity(name, params, 2)?;
            lollipop(arg(name, params, 0, Some(4))?, arg(name, params, 1, Some(1))?)
        }
        "tadpole" => {
            arity(name, params, 2)?;
            tadpole(arg(name, params, 0, Some(3))?, arg(name, params, 1, Some(2))?)
        }
        "sun" => {
            let rays: Vec<usize> = (0..params.len()).map(|i| arg(name, params, i, None)).collect::<Result<_>>()?;
            sun(&rays)
        }
        "cross_polytope" | "cross" => {
            arity(name, params, 1)?;
            Ok(cross_polytope(arg(name, params, 0, None)?))
        }
        "erdos_renyi" | "random" => {
            arity(name, params, 3)?;
            let n = arg(name, params, 0, None)?;
            let p = u32::try_from(arg(name, params, 1, None)?).map_err(|_| bad(name, "percent must be at most 100"))?;
            erdos_renyi(n, p, params.get(2).copied().unwrap_or(0))
        }
        "random_tree" | "tree" => {
            arity(name, params, 2)?;
            Ok(random_tree(arg(name, params, 0, None)?, params.get(1).copied().unwrap_or(0)))
        }
        other => Err(Error::UnknownGraph(String::from(other))),
    }
}

/// Names accepted by [`named`].
pub const NAMES: &[&str] = &[
    "complete",
    "cycle",
    "path",
    "star",
    "wheel",
    "octahedron",
    "icosahedron",
    "house",
    "lollipop",
    "tadpole",
    "sun",
    "cross_polytope",
    "erdos_renyi",
    "random_tree",
];
