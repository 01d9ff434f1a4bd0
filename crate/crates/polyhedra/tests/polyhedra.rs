use std::collections::{BTreeSet, HashSet};

use polyhedra_gen::{enumerate_polyhedra, from_neighbor_lists, octahedron, PlanarEmbedding, PolyhedronRecord};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Adjacency lists of the underlying multigraph, rebuilt from raw arrays.
fn neighbours(e: &PlanarEmbedding) -> Vec<Vec<usize>> {
    let mut owner = vec![0; e.dart_count()];
    for (v, ds) in e.rotation().iter().enumerate() {
        for &d in ds {
            owner[d] = v;
        }
    }
    e.rotation().iter().map(|ds| ds.iter().map(|&d| owner[e.pairing()[d]]).collect()).collect()
}

/// Face count by walking `d -> next(pair(d))` with explicit position lookups.
fn face_sizes(e: &PlanarEmbedding) -> Vec<usize> {
    let n = e.dart_count();
    let mut at = vec![(0, 0); n];
    for (v, ds) in e.rotation().iter().enumerate() {
        for (i, &d) in ds.iter().enumerate() {
            at[d] = (v, i);
        }
    }
    let next = |d: usize| {
        let (v, i) = at[e.pairing()[d]];
        e.rotation()[v][(i + 1) % 4]
    };
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        let mut len = 0;
        let mut d = s;
        while !seen[d] {
            seen[d] = true;
            len += 1;
            d = next(d);
        }
        if len > 0 {
            out.push(len);
        }
    }
    out
}

/// Smallest edge cut by brute force over edge subsets of size 1 and 2.
fn min_cut_at_most_two(nb: &[Vec<usize>]) -> bool {
    let mut edges = Vec::new();
    for (u, l) in nb.iter().enumerate() {
        for &w in l {
            if u < w {
                edges.push((u, w));
            }
        }
    }
    let connected = |skip: &[usize]| {
        let mut parent: Vec<usize> = (0..nb.len()).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            if p[x] != x {
                let r = find(p, p[x]);
                p[x] = r;
            }
            p[x]
        }
        for (i, &(u, w)) in edges.iter().enumerate() {
            if !skip.contains(&i) {
                let (a, b) = (find(&mut parent, u), find(&mut parent, w));
                parent[a] = b;
            }
        }
        let r = find(&mut parent, 0);
        (0..nb.len()).all(|x| find(&mut parent, x) == r)
    };
    (0..edges.len()).any(|i| !connected(&[i]) || (i + 1..edges.len()).any(|j| !connected(&[i, j])))
}

fn random_copy(e: &PlanarEmbedding, rng: &mut ChaCha8Rng) -> PlanarEmbedding {
    let v = e.vertex_count();
    let mut perm: Vec<usize> = (0..v).collect();
    perm.shuffle(rng);
    let shift: Vec<usize> = (0..v).map(|_| rng.gen_range(0..4)).collect();
    let r = e.relabel(&perm, &shift);
    if rng.gen_bool(0.5) {
        r.reflect()
    } else {
        r
    }
}

#[test]
fn counts_up_to_eleven_vertices() {
    let recs = enumerate_polyhedra(11);
    let per_v: Vec<usize> = (6..=11).map(|v| recs.iter().filter(|r| r.vertex_count == v).count()).collect();
    assert_eq!(per_v, vec![1, 0, 1, 1, 3, 3]);
}

#[test]
fn records_pass_independent_checks() {
    for r in enumerate_polyhedra(11) {
        let e = &r.embedding;
        let nb = neighbours(e);
        assert!(nb.iter().all(|l| l.len() == 4));
        for (u, l) in nb.iter().enumerate() {
            let set: HashSet<_> = l.iter().collect();
            assert_eq!(set.len(), 4, "parallel edges at {u}");
            assert!(!set.contains(&u), "loop at {u}");
        }
        let f = face_sizes(e);
        let v = r.vertex_count as i64;
        assert_eq!(v - 2 * v + f.len() as i64, 2, "not spherical");
        assert!(f.iter().all(|&s| s >= 3), "bigon face");
        assert!(!min_cut_at_most_two(&nb));
        let mut sorted = e.faces();
        sorted.sort_unstable();
        let mut g = f.clone();
        g.sort_unstable();
        assert_eq!(sorted, g);
    }
}

#[test]
fn codes_survive_relabelling_and_reflection() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for r in enumerate_polyhedra(11) {
        for _ in 0..5 {
            assert_eq!(random_copy(&r.embedding, &mut rng).canonical_code(), r.canonical_code);
        }
    }
}

#[test]
fn ten_vertex_codes_are_distinct() {
    let recs = enumerate_polyhedra(10);
    let codes: BTreeSet<_> = recs.iter().filter(|r| r.vertex_count == 10).map(|r| r.canonical_code.clone()).collect();
    assert_eq!(codes.len(), 3);
}

#[test]
fn output_is_sorted_and_deterministic() {
    let a = enumerate_polyhedra(10);
    let b = enumerate_polyhedra(10);
    assert_eq!(a, b);
    assert!(a.windows(2).all(|w| (w[0].vertex_count, &w[0].canonical_code) < (w[1].vertex_count, &w[1].canonical_code)));
}

#[test]
fn json_roundtrip() {
    for r in enumerate_polyhedra(9) {
        let line = r.to_json();
        assert_eq!(PolyhedronRecord::from_json(&line).unwrap(), r);
    }
}

#[test]
fn octahedron_properties() {
    let o = octahedron();
    assert_eq!(o.faces(), vec![3; 8]);
    assert!(!o.has_two_edge_cut());
    assert_eq!(o.canonical_code(), o.reflect().canonical_code());
    assert_eq!(enumerate_polyhedra(6).len(), 1);
    assert_eq!(enumerate_polyhedra(6)[0].canonical_code, o.canonical_code());
}

/// Two octahedra, each with one equatorial edge cut, joined by two new edges.
#[test]
fn spliced_octahedra_are_thin() {
    let base: Vec<Vec<usize>> = vec![
        vec![1, 2, 3, 4],
        vec![0, 4, 5, 2],
        vec![0, 1, 5, 3],
        vec![0, 2, 5, 4],
        vec![0, 3, 5, 1],
        vec![4, 3, 2, 1],
    ];
    let mut nb: Vec<Vec<usize>> = base.clone();
    nb.extend(base.iter().map(|l| l.iter().map(|x| x + 6).collect::<Vec<_>>()));
    // Cut 1-2 in the first copy and 7-8 in the second; join 1-7 and 2-8.
    for (a, b, c) in [(1, 2, 7), (2, 1, 8), (7, 8, 1), (8, 7, 2)] {
        let i = nb[a].iter().position(|&x| x == b).unwrap();
        nb[a][i] = c;
    }
    let e = from_neighbor_lists(&nb);
    assert!(e.is_simple());
    assert!(e.is_spherical());
    assert!(e.has_two_edge_cut());
    assert!(min_cut_at_most_two(&neighbours(&e)));
}

#[test]
fn four_valent_maps_have_no_bridge() {
    let o = octahedron();
    let nb = neighbours(&o);
    for (u, l) in nb.iter().enumerate() {
        for &w in l {
            let mut cut = nb.clone();
            cut[u].retain(|&x| x != w);
            cut[w].retain(|&x| x != u);
            let mut seen = vec![false; cut.len()];
            let mut stack = vec![0];
            seen[0] = true;
            while let Some(x) = stack.pop() {
                for &y in &cut[x] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            assert!(seen.iter().all(|&s| s));
        }
    }
}
