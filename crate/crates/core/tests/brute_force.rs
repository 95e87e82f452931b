//! The greedy construction against a naive reimplementation over Z_m with
//! the natural order and the standard basis.

use std::collections::BTreeSet;

use proptest::prelude::*;

use lexiring::greedy;
use lexiring::pipeline::RunConfig;

type V = Vec<u32>;

fn all_vectors(m: u32, n: usize) -> Vec<V> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| (0..m).map(move |a| {
                let mut w = v.clone();
                w.push(a);
                w
            }))
            .collect();
    }
    out
}

fn level(v: &V) -> usize {
    v.iter().rposition(|&c| c != 0).map_or(0, |j| j + 1)
}

fn sort_key(v: &V) -> (usize, Vec<u32>) {
    (level(v), v.iter().rev().copied().collect())
}

fn add(m: u32, a: &V, b: &V) -> V {
    a.iter().zip(b).map(|(x, y)| (x + y) % m).collect()
}

fn scale(m: u32, r: u32, a: &V) -> V {
    a.iter().map(|x| r * x % m).collect()
}

fn hamming(v: &V) -> u32 {
    v.iter().filter(|&&c| c != 0).count() as u32
}

fn lee(m: u32, v: &V) -> u32 {
    v.iter().map(|&c| c.min(m - c)).sum()
}

#[derive(Debug, Clone, Copy)]
enum Weight {
    Hamming,
    Lee,
}

struct Prop {
    m: u32,
    weight: Weight,
    d: u32,
    zero: bool,
}

impl Prop {
    fn holds(&self, v: &V) -> bool {
        if v.iter().all(|&c| c == 0) {
            return self.zero;
        }
        let w = match self.weight {
            Weight::Hamming => hamming(v),
            Weight::Lee => lee(self.m, v),
        };
        w >= self.d
    }

    fn text(&self) -> String {
        let name = match self.weight {
            Weight::Hamming => "hamming",
            Weight::Lee => "lee",
        };
        format!("{name}>={} zero:{}", self.d, self.zero)
    }
}

/// Proper divisors of m generate the nonzero ideals of Z_m.
fn gamma(m: u32) -> Vec<u32> {
    (1..m).filter(|d| m.is_multiple_of(*d)).collect()
}

fn naive_lexicode(m: u32, n: usize, p: &Prop) -> (Vec<V>, BTreeSet<V>) {
    let mut space = all_vectors(m, n);
    space.sort_by_key(sort_key);
    let mut code: BTreeSet<V> = BTreeSet::from([vec![0; n]]);
    let mut selected = Vec::new();
    for i in 1..=n {
        let pick = space.iter().filter(|v| level(v) == i).find(|x| {
            gamma(m)
                .iter()
                .all(|&g| code.iter().all(|c| p.holds(&add(m, &scale(m, g, x), c))))
        });
        if let Some(x) = pick {
            let mut next = BTreeSet::new();
            for c in &code {
                for r in 0..m {
                    next.insert(add(m, c, &scale(m, r, x)));
                }
            }
            code = next;
            selected.push(x.clone());
        }
    }
    (selected, code)
}

fn library_lexicode(m: u32, n: usize, p: &Prop) -> (Vec<V>, BTreeSet<V>) {
    let mut cfg = RunConfig::new(&format!("zmod:{m}"), n, &p.text()).order("natural");
    cfg.allow_nonmultiplicative = true;
    let out = cfg.execute().expect("run");
    let amb = out.prepared.ambient();
    let to_v = |k: usize| amb.decode(k).into_iter().map(|c| c as u32).collect::<V>();
    let selected = out.lexicode.selected_keys().into_iter().map(to_v).collect();
    let code = out.lexicode.code().members().iter().map(|&k| to_v(k)).collect();
    (selected, code)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn greedy_matches_naive(
        m in 2u32..=9,
        n in 1usize..=3,
        d in 1u32..=4,
        lee in any::<bool>(),
        zero in any::<bool>(),
    ) {
        let p = Prop { m, weight: if lee { Weight::Lee } else { Weight::Hamming }, d, zero };
        let expected = naive_lexicode(m, n, &p);
        let actual = library_lexicode(m, n, &p);
        prop_assert_eq!(actual, expected);
    }
}

#[test]
fn z4_lee_distance_two() {
    let p = Prop { m: 4, weight: Weight::Lee, d: 2, zero: false };
    let (selected, code) = naive_lexicode(4, 4, &p);
    let (lib_selected, lib_code) = library_lexicode(4, 4, &p);
    assert_eq!(lib_selected, selected);
    assert_eq!(lib_code, code);
}

#[test]
fn naive_dual_agrees() {
    for (m, gens) in [(4u32, vec![vec![1, 1, 1, 1]]), (6, vec![vec![1, 2, 3], vec![0, 3, 3]]), (9, vec![vec![3, 3, 0]])] {
        let n = gens[0].len();
        let cfg = RunConfig::new(&format!("zmod:{m}"), n, "hamming>=1");
        let prepared = cfg.prepare().unwrap();
        let amb = prepared.ambient();
        let keys: Vec<usize> = gens.iter().map(|g| amb.encode(&g.iter().map(|&c| c as usize).collect::<Vec<_>>())).collect();
        let code = greedy::Code::from_generators(amb, &keys);
        let dual = greedy::dual_code(&code).unwrap();
        let naive: Vec<V> = all_vectors(m, n)
            .into_iter()
            .filter(|y| gens.iter().all(|g| g.iter().zip(y).map(|(a, b)| a * b).sum::<u32>() % m == 0))
            .collect();
        assert_eq!(dual.len(), naive.len(), "zmod:{m}");
        assert_eq!(code.len() * dual.len(), (m as usize).pow(n as u32), "zmod:{m}");
    }
}
