//! Graph families used as fixtures and verification corpora.
//!
//! Constructions whose shape is only sketched in the literature (extended grids, the necklace,
//! the ordering example) are pinned down here; each builder asserts the connectivity it promises.

use crate::connectivity::is_k_connected;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vset::Vertex;

fn bad(family: &str, msg: impl Into<String>) -> Error {
    Error::InvalidParams { family: family.to_string(), msg: msg.into() }
}

fn check_ids(family: &str, n: usize) -> Result<()> {
    if n > 64 {
        return Err(bad(family, format!("needs {n} vertices, at most 64 supported")));
    }
    Ok(())
}

pub fn complete(n: usize) -> Result<Graph> {
    check_ids("complete", n)?;
    let mut g = Graph::with_vertices(n)?;
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(bad("cycle", "length must be at least 3"));
    }
    check_ids("cycle", n)?;
    let mut g = Graph::with_vertices(n)?;
    for i in 0..n {
        g.add_edge(i, (i + 1) % n)?;
    }
    Ok(g)
}

/// Hub `0`, rim `1..=rim` in cyclic order.
pub fn wheel(rim: usize) -> Result<Graph> {
    if rim < 3 {
        return Err(bad("wheel", "rim must have at least 3 vertices"));
    }
    check_ids("wheel", rim + 1)?;
    let mut g = Graph::with_vertices(rim + 1)?;
    for i in 1..=rim {
        g.add_edge(0, i)?;
        g.add_edge(i, i % rim + 1)?;
    }
    Ok(g)
}

/// `K_{3,m}`: the class of size three is `{0,1,2}`, the other class is `3..3+m`.
pub fn k3m(m: usize) -> Result<Graph> {
    check_ids("k3m", m + 3)?;
    let mut g = Graph::with_vertices(m + 3)?;
    for y in 0..3 {
        for x in 3..3 + m {
            g.add_edge(y, x)?;
        }
    }
    Ok(g)
}

/// `K_{3,m}` with the class `{0,1,2}` made a triangle. `m = 0` is a triangle.
pub fn thickened_k3m(m: usize) -> Result<Graph> {
    let mut g = k3m(m)?;
    g.add_edge(0, 1)?;
    g.add_edge(1, 2)?;
    g.add_edge(0, 2)?;
    Ok(g)
}

pub fn petersen() -> Graph {
    let mut g = Graph::with_vertices(10).unwrap();
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5).unwrap();
        g.add_edge(i, i + 5).unwrap();
        g.add_edge(5 + i, 5 + (i + 2) % 5).unwrap();
    }
    g
}

/// Circulant graph on `Z_n` with the given jumps (taken symmetrically).
pub fn circulant(n: usize, jumps: &[usize]) -> Result<Graph> {
    check_ids("circulant", n)?;
    let mut g = Graph::with_vertices(n)?;
    for i in 0..n {
        for &j in jumps {
            let j = j % n;
            if j != 0 {
                g.add_edge(i, (i + j) % n)?;
            }
        }
    }
    Ok(g)
}

/// Honeycomb lattice on a `p × q` torus: white vertex `(i,j)` (id `2(iq+j)`) is joined to the
/// black vertices `(i,j)`, `(i+1,j)` and `(i,j+1)` (ids `2(iq+j)+1`), indices mod `p` and `q`.
pub fn hexgrid(p: usize, q: usize) -> Result<Graph> {
    if p < 3 || q < 3 {
        return Err(bad("hexgrid", "p and q must be at least 3"));
    }
    check_ids("hexgrid", 2 * p * q)?;
    let id = |i: usize, j: usize| 2 * ((i % p) * q + (j % q));
    let mut g = Graph::with_vertices(2 * p * q)?;
    for i in 0..p {
        for j in 0..q {
            g.add_edge(id(i, j), id(i, j) + 1)?;
            g.add_edge(id(i, j), id(i + 1, j) + 1)?;
            g.add_edge(id(i, j), id(i, j + 1) + 1)?;
        }
    }
    assert!(g.vertices().iter().all(|v| g.degree(v) == 3), "hexgrid must be cubic");
    assert!(is_k_connected(&g, 3), "hexgrid must be 3-connected");
    Ok(g)
}

/// `3 × k` grid whose two end columns are closed into triangles. Vertex `(r, c)` has id `3c + r`.
pub fn grid3k(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(bad("grid3k", "k must be at least 3"));
    }
    check_ids("grid3k", 3 * k)?;
    let id = |r: usize, c: usize| 3 * c + r;
    let mut g = Graph::with_vertices(3 * k)?;
    for c in 0..k {
        g.add_edge(id(0, c), id(1, c))?;
        g.add_edge(id(1, c), id(2, c))?;
        if c + 1 < k {
            for r in 0..3 {
                g.add_edge(id(r, c), id(r, c + 1))?;
            }
        }
    }
    g.add_edge(id(0, 0), id(2, 0))?;
    g.add_edge(id(0, k - 1), id(2, k - 1))?;
    assert!(is_k_connected(&g, 3), "extended grid must be 3-connected");
    Ok(g)
}

/// Vertex sets of the columns of [`grid3k`].
pub fn grid3k_columns(k: usize) -> Vec<crate::vset::VSet> {
    (0..k).map(|c| (3 * c..3 * c + 3).collect()).collect()
}

/// A path of `t` copies of `K_5`, consecutive copies sharing two vertices, closed up by two
/// adjacent apex vertices of degree three: one apex sees two private vertices of the first
/// copy, the other two private vertices of the last copy.
pub fn necklace(t: usize) -> Result<Graph> {
    if t < 2 {
        return Err(bad("necklace", "need at least two cliques"));
    }
    let mut next: Vertex = 0;
    let mut take = |k: usize| {
        let out: Vec<Vertex> = (next..next + k).collect();
        next += k;
        out
    };
    let shared: Vec<Vec<Vertex>> = (0..t - 1).map(|_| take(2)).collect();
    let mut cliques: Vec<Vec<Vertex>> = Vec::new();
    for i in 0..t {
        let private = if i == 0 || i == t - 1 { 3 } else { 1 };
        let mut c = take(private);
        if i > 0 {
            c.extend(&shared[i - 1]);
        }
        if i + 1 < t {
            c.extend(&shared[i]);
        }
        cliques.push(c);
    }
    let apex = take(2);
    let n = apex[1] + 1;
    check_ids("necklace", n)?;
    let mut g = Graph::with_vertices(n)?;
    for c in &cliques {
        for (i, &u) in c.iter().enumerate() {
            for &v in &c[i + 1..] {
                g.add_edge(u, v)?;
            }
        }
    }
    g.add_edge(apex[0], apex[1])?;
    g.add_edge(apex[0], cliques[0][0])?;
    g.add_edge(apex[0], cliques[0][1])?;
    g.add_edge(apex[1], cliques[t - 1][0])?;
    g.add_edge(apex[1], cliques[t - 1][1])?;
    assert!(is_k_connected(&g, 3), "necklace must be 3-connected");
    Ok(g)
}

/// `K_n` on `0..n` with three degree-3 vertices `n`, `n+1`, `n+2` attached to `{0,1,2}`,
/// `{1,2,3}` and `{2,3,4}`; every edge inside one of these neighbourhoods is deleted except `01`.
pub fn figord(n: usize) -> Result<Graph> {
    if n < 6 {
        return Err(bad("figord", "n must be at least 6"));
    }
    check_ids("figord", n + 3)?;
    let mut g = complete(n)?;
    let hoods = [[0, 1, 2], [1, 2, 3], [2, 3, 4]];
    for (i, h) in hoods.iter().enumerate() {
        for &x in h {
            g.add_edge(n + i, x)?;
        }
    }
    for h in &hoods {
        for a in 0..3 {
            for b in a + 1..3 {
                let (u, v) = (h[a], h[b]);
                if (u, v) != (0, 1) && g.has_edge(u, v) {
                    g.remove_edge(u, v)?;
                }
            }
        }
    }
    assert!(is_k_connected(&g, 3), "figord must be 3-connected");
    Ok(g)
}

/// `K_n` on `0..n` whose triangle `{0,1,2}` is replaced by a new triangle `{n,n+1,n+2}` joined by
/// the matching `i — n+i`.
pub fn prism_kn(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(bad("k10prism", "n must be at least 4"));
    }
    check_ids("k10prism", n + 3)?;
    let mut g = complete(n)?;
    for (a, b) in [(0, 1), (1, 2), (0, 2)] {
        g.remove_edge(a, b)?;
    }
    for i in 0..3 {
        g.add_edge(i, n + i)?;
        g.add_edge(n + i, n + (i + 1) % 3)?;
    }
    Ok(g)
}

/// Concrete generalised wheel: centre `0`, rim `1..=rim`; bit `i` of `spokes` joins rim vertex
/// `i+1` to the centre, bit `i` of `ys` attaches a new vertex to the centre and the rim edge
/// from `i+1` to `(i+1) % rim + 1`.
pub fn genwheel(rim: usize, spokes: u64, ys: u64) -> Result<Graph> {
    if rim < 3 {
        return Err(bad("genwheel", "rim must have at least 3 vertices"));
    }
    let extra = (ys & ((1u64 << rim) - 1)).count_ones() as usize;
    check_ids("genwheel", 1 + rim + extra)?;
    let mut g = Graph::with_vertices(1 + rim)?;
    let mut next = rim + 1;
    for i in 0..rim {
        let (x, y) = (i + 1, (i + 1) % rim + 1);
        g.add_edge(x, y)?;
        if spokes >> i & 1 == 1 {
            g.add_edge(0, x)?;
        }
        if ys >> i & 1 == 1 {
            g.add_edge(next, x)?;
            g.add_edge(next, y)?;
            g.add_edge(next, 0)?;
            next += 1;
        }
    }
    if let Some(v) = g.vertices().iter().find(|&v| g.degree(v) < 3) {
        return Err(bad("genwheel", format!("vertex {v} has degree below 3")));
    }
    Ok(g)
}

/// `K_{3,m}` (class `Y = {0,1,2}`, class `X = 3..3+m`) plus four disjoint triangles, each joined
/// to `Y` by a perfect matching. Triangle `i` is `3+m+3i .. 3+m+3i+3`.
pub fn k3m_with_triangles(m: usize) -> Result<Graph> {
    let n = 3 + m + 12;
    check_ids("k3m-with-triangles", n)?;
    let mut g = k3m(m)?;
    for i in 0..4 {
        let base = 3 + m + 3 * i;
        for j in 0..3 {
            g.add_edge(base + j, base + (j + 1) % 3)?;
            g.add_edge(base + j, j)?;
        }
    }
    Ok(g)
}

/// The four triangles of [`k3m_with_triangles`].
pub fn k3m_triangles(m: usize) -> Vec<crate::vset::VSet> {
    (0..4).map(|i| (3 + m + 3 * i..3 + m + 3 * i + 3).collect()).collect()
}

/// Builds a family member from its command-line name and integer parameters.
pub fn generate(family: &str, params: &[u64]) -> Result<Graph> {
    let p = |i: usize, default: u64| params.get(i).copied().unwrap_or(default) as usize;
    let need = |k: usize| -> Result<()> {
        if params.len() < k {
            Err(bad(family, format!("expected {k} parameter(s)")))
        } else {
            Ok(())
        }
    };
    match family {
        "wheel" => {
            need(1)?;
            wheel(p(0, 0))
        }
        "k3m" => {
            need(1)?;
            k3m(p(0, 0))
        }
        "thickened-k3m" => {
            need(1)?;
            thickened_k3m(p(0, 0))
        }
        "hexgrid" => hexgrid(p(0, 3), p(1, 4)),
        "grid3k" => {
            need(1)?;
            grid3k(p(0, 0))
        }
        "necklace" => necklace(p(0, 3)),
        "figord" => figord(p(0, 10)),
        "k10prism" => prism_kn(p(0, 10)),
        "genwheel" => {
            need(3)?;
            genwheel(p(0, 0), params[1], params[2])
        }
        "k3m-with-triangles" => {
            need(1)?;
            k3m_with_triangles(p(0, 0))
        }
        "complete" => {
            need(1)?;
            complete(p(0, 0))
        }
        "cycle" => {
            need(1)?;
            cycle(p(0, 0))
        }
        "petersen" => Ok(petersen()),
        "circulant" => {
            need(2)?;
            circulant(p(0, 0), &params[1..].iter().map(|&x| x as usize).collect::<Vec<_>>())
        }
        _ => Err(bad(family, "unknown family")),
    }
}

/// Names accepted by [`generate`].
pub const FAMILIES: &[&str] = &[
    "wheel",
    "k3m",
    "thickened-k3m",
    "hexgrid",
    "grid3k",
    "necklace",
    "figord",
    "k10prism",
    "genwheel",
    "k3m-with-triangles",
    "complete",
    "cycle",
    "petersen",
    "circulant",
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wheel_counts() {
        let g = wheel(4).unwrap();
        assert_eq!((g.n(), g.m()), (5, 8));
    }

    #[test]
    fn thickened_zero_is_triangle() {
        let g = thickened_k3m(0).unwrap();
        assert_eq!((g.n(), g.m()), (3, 3));
    }

    #[test]
    fn declared_three_connected() {
        for g in [
            wheel(5).unwrap(),
            k3m(3).unwrap(),
            thickened_k3m(1).unwrap(),
            hexgrid(3, 4).unwrap(),
            grid3k(5).unwrap(),
            necklace(3).unwrap(),
            figord(10).unwrap(),
            prism_kn(10).unwrap(),
            k3m_with_triangles(2).unwrap(),
            genwheel(5, 0b10101, 0b01010).unwrap(),
        ] {
            assert!(is_k_connected(&g, 3), "{g:?}");
        }
    }

    #[test]
    fn figord_has_three_degree_three_attachments() {
        let g = figord(10).unwrap();
        assert!((10..13).all(|v| g.degree(v) == 3));
    }

    #[test]
    fn bad_params() {
        assert!(wheel(2).is_err());
        assert!(generate("nope", &[]).is_err());
        assert!(genwheel(4, 0, 0).is_err());
    }
}
