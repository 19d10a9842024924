//! Independent oracles shared by the integration tests. None of these reuse
//! the library's search code; they are deliberately naive.

#![allow(dead_code)]

use std::collections::BTreeSet;

use deltamin::colouring::{Colour, EdgeColouring};
use deltamin::graph::Graph;

/// Plain backtracking in edge-id order, no ordering heuristics and no
/// symmetry breaking. Edges flagged in `skip` are ignored.
pub fn naive_3_colourable(g: &Graph, skip: &[bool]) -> bool {
    fn go(g: &Graph, skip: &[bool], colour: &mut Vec<u8>, e: usize) -> bool {
        if e == g.edge_count() {
            return true;
        }
        if skip[e] {
            return go(g, skip, colour, e + 1);
        }
        let (u, v) = g.edges()[e];
        for c in 0..3u8 {
            let clash = g.edges()[..e].iter().enumerate().any(|(f, &(a, b))| {
                !skip[f] && colour[f] == c && (a == u || a == v || b == u || b == v)
            });
            if !clash {
                colour[e] = c;
                if go(g, skip, colour, e + 1) {
                    return true;
                }
            }
        }
        colour[e] = u8::MAX;
        false
    }
    let mut colour = vec![u8::MAX; g.edge_count()];
    go(g, skip, &mut colour, 0)
}

/// All matchings of exactly `k` edges, as sorted id lists.
pub fn matchings_of_size(g: &Graph, k: usize) -> Vec<Vec<usize>> {
    fn go(
        g: &Graph,
        k: usize,
        from: usize,
        used: &mut BTreeSet<usize>,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for e in from..g.edge_count() {
            let (u, v) = g.edges()[e];
            if used.contains(&u) || used.contains(&v) {
                continue;
            }
            used.insert(u);
            used.insert(v);
            cur.push(e);
            go(g, k, e + 1, used, cur, out);
            cur.pop();
            used.remove(&u);
            used.remove(&v);
        }
    }
    let mut out = Vec::new();
    go(g, k, 0, &mut BTreeSet::new(), &mut Vec::new(), &mut out);
    out
}

/// Smallest `k` such that deleting some matching of size `k` leaves a
/// 3-edge-colourable graph, trying sizes up to `max_k`.
pub fn brute_colour_number(g: &Graph, max_k: usize) -> Option<usize> {
    (0..=max_k).find(|&k| {
        matchings_of_size(g, k).iter().any(|m| {
            let mut skip = vec![false; g.edge_count()];
            for &e in m {
                skip[e] = true;
            }
            naive_3_colourable(g, &skip)
        })
    })
}

/// Perfect matchings by trying every edge subset of size n/2.
pub fn brute_perfect_matchings(g: &Graph) -> Vec<Vec<usize>> {
    if g.vertex_count() % 2 == 1 {
        return Vec::new();
    }
    matchings_of_size(g, g.vertex_count() / 2)
}

/// graph6 encoder written straight from the format description.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258_048 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    for chunk in bits.chunks(6) {
        let mut byte = 0u8;
        for (k, &b) in chunk.iter().enumerate() {
            if b {
                byte |= 1 << (5 - k);
            }
        }
        out.push(byte + 63);
    }
    String::from_utf8(out).unwrap()
}

pub fn petersen_edges() -> Vec<(usize, usize)> {
    vec![
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 4),
        (0, 4),
        (0, 5),
        (1, 6),
        (2, 7),
        (3, 8),
        (4, 9),
        (5, 7),
        (7, 9),
        (6, 9),
        (6, 8),
        (5, 8),
    ]
}

/// Shortest cycle length by trying every edge: drop it and take the BFS
/// distance between its ends.
pub fn brute_girth(g: &Graph) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let mut dist = vec![usize::MAX; g.vertex_count()];
        dist[u] = 0;
        let mut queue = std::collections::VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            for (f, &(a, b)) in g.edges().iter().enumerate() {
                if f == e || (a != x && b != x) {
                    continue;
                }
                let y = if a == x { b } else { a };
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        if dist[v] != usize::MAX {
            let len = dist[v] + 1;
            best = Some(best.map_or(len, |b: usize| b.min(len)));
        }
    }
    best
}

/// Whether a bijection maps `a` onto `b`, by backtracking on vertex images.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    count_isomorphisms(a, b, true) > 0
}

/// Number of automorphisms, by the same backtracking.
pub fn automorphism_count(g: &Graph) -> usize {
    count_isomorphisms(g, g, false)
}

fn count_isomorphisms(a: &Graph, b: &Graph, stop_at_one: bool) -> usize {
    fn go(
        a: &Graph,
        b: &Graph,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        v: usize,
        stop: bool,
    ) -> usize {
        let n = a.vertex_count();
        if v == n {
            return 1;
        }
        let mut total = 0;
        for w in 0..n {
            if used[w] || a.degree(v) != b.degree(w) {
                continue;
            }
            let consistent = (0..v).all(|u| a.has_edge(u, v) == b.has_edge(map[u], w));
            if !consistent {
                continue;
            }
            map[v] = w;
            used[w] = true;
            total += go(a, b, map, used, v + 1, stop);
            used[w] = false;
            if stop && total > 0 {
                return total;
            }
        }
        total
    }
    let n = a.vertex_count();
    go(a, b, &mut vec![0; n], &mut vec![false; n], 0, stop_at_one)
}

/// Every labelled connected cubic graph on `n` vertices is counted once:
/// the lowest vertex still short of degree three is joined to a later
/// partner, partners of one vertex in increasing order.
pub fn labelled_connected_cubic_count(n: usize) -> usize {
    fn go(
        n: usize,
        deg: &mut Vec<usize>,
        adj: &mut Vec<Vec<bool>>,
        last: &mut Vec<usize>,
        count: &mut usize,
    ) {
        let Some(v) = (0..n).find(|&v| deg[v] < 3) else {
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| adj[i][j])
                .collect();
            if Graph::new(n, &edges).unwrap().is_connected() {
                *count += 1;
            }
            return;
        };
        let start = last[v].max(v) + 1;
        for w in start..n {
            if deg[w] >= 3 || adj[v][w] {
                continue;
            }
            let saved = last[v];
            adj[v][w] = true;
            adj[w][v] = true;
            deg[v] += 1;
            deg[w] += 1;
            last[v] = w;
            go(n, deg, adj, last, count);
            last[v] = saved;
            deg[v] -= 1;
            deg[w] -= 1;
            adj[v][w] = false;
            adj[w][v] = false;
        }
    }
    let mut count = 0;
    go(
        n,
        &mut vec![0; n],
        &mut vec![vec![false; n]; n],
        &mut vec![0; n],
        &mut count,
    );
    count
}

/// A random δ-improper colouring: edges in shuffled order take a random
/// base colour free at both ends or δ, then some extra edges are forced to
/// δ. Both steps keep every clash a δ-δ clash.
pub fn random_delta_improper<'g>(g: &'g Graph, rng: &mut impl rand::Rng) -> EdgeColouring<'g> {
    use rand::seq::SliceRandom;
    let mut c = EdgeColouring::uniform(g, Colour::Delta);
    let mut order: Vec<usize> = (0..g.edge_count()).collect();
    order.shuffle(rng);
    for e in order {
        let (u, v) = g.endpoints(e);
        let free: Vec<Colour> = Colour::BASE
            .into_iter()
            .filter(|&x| {
                g.incident_edges(u)
                    .chain(g.incident_edges(v))
                    .all(|f| f == e || c.colour(f) != x)
            })
            .collect();
        if rng.gen_bool(0.8) {
            if let Some(&x) = free.choose(rng) {
                c.recolour(e, x);
            }
        }
    }
    for e in 0..g.edge_count() {
        if rng.gen_bool(0.15) {
            c.recolour(e, Colour::Delta);
        }
    }
    c
}

/// Vertices meeting exactly one edge coloured `x` or `y`.
pub fn kempe_degree_one_count(c: &EdgeColouring<'_>, x: Colour, y: Colour) -> usize {
    let g = c.graph();
    (0..g.vertex_count())
        .filter(|&v| {
            g.incident_edges(v)
                .filter(|&e| c.colour(e) == x || c.colour(e) == y)
                .count()
                == 1
        })
        .count()
}
