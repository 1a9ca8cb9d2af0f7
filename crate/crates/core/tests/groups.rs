mod common;

use gpplanar::*;
use proptest::prelude::*;

fn product(orders: &[u32], mask: u64) -> ProductGraph {
    let n = orders.len();
    let ids: Vec<String> = (0..n).map(|i| format!("g{i}")).collect();
    let edges = common::pairs(n)
        .into_iter()
        .enumerate()
        .filter(|(k, _)| mask >> k & 1 == 1)
        .map(|(_, (i, j))| (ids[i].clone(), ids[j].clone()))
        .collect::<Vec<_>>();
    ProductGraph::new(ids.iter().cloned().zip(orders.iter().copied()), edges).unwrap()
}

fn word(g: &ProductGraph, raw: &[(usize, i64)]) -> Word {
    Word(raw.iter().filter_map(|&(v, e)| Syllable::new(g, v % g.len(), e)).collect())
}

fn graphs() -> impl Strategy<Value = ProductGraph> {
    (prop::collection::vec(2u32..6, 1..6), any::<u64>()).prop_map(|(orders, mask)| product(&orders, mask))
}

fn raw_word() -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec((0usize..8, -7i64..8), 0..12)
}

proptest! {
    #[test]
    fn group_axioms(g in graphs(), a in raw_word(), b in raw_word(), c in raw_word()) {
        let (a, b, c) = (normalize(&g, &word(&g, &a)), normalize(&g, &word(&g, &b)), normalize(&g, &word(&g, &c)));
        let e = NormalForm::identity();
        prop_assert_eq!(multiply(&g, &a, &e), a.clone());
        prop_assert_eq!(multiply(&g, &e, &a), a.clone());
        prop_assert_eq!(multiply(&g, &a, &invert(&g, &a)), e.clone());
        prop_assert_eq!(multiply(&g, &invert(&g, &a), &a), e);
        prop_assert_eq!(
            multiply(&g, &multiply(&g, &a, &b), &c),
            multiply(&g, &a, &multiply(&g, &b, &c))
        );
        prop_assert_eq!(invert(&g, &multiply(&g, &a, &b)), multiply(&g, &invert(&g, &b), &invert(&g, &a)));
    }

    #[test]
    fn normal_forms_are_fixed_points(g in graphs(), a in raw_word()) {
        let x = normalize(&g, &word(&g, &a));
        prop_assert_eq!(normalize(&g, &Word(x.syllables().to_vec())), x.clone());
        prop_assert_eq!(NormalForm::parse(&g, &x.to_text(&g)).unwrap(), x);
    }

    #[test]
    fn complete_graphs_match_exponent_vectors(orders in prop::collection::vec(2u32..7, 1..5), a in raw_word(), b in raw_word()) {
        let n = orders.len();
        let g = product(&orders, u64::MAX);
        let vector = |raw: &[(usize, i64)]| {
            let mut v = vec![0i64; n];
            for &(i, e) in raw {
                v[i % n] = (v[i % n] + e).rem_euclid(i64::from(orders[i % n]));
            }
            v
        };
        let same = normalize(&g, &word(&g, &a)) == normalize(&g, &word(&g, &b));
        prop_assert_eq!(same, vector(&a) == vector(&b));
    }

    #[test]
    fn edgeless_graphs_match_free_reduction(orders in prop::collection::vec(2u32..6, 1..5), a in raw_word()) {
        let g = product(&orders, 0);
        let mut stack: Vec<(usize, i64)> = Vec::new();
        for &(v, e) in &a {
            let v = v % orders.len();
            let n = i64::from(orders[v]);
            match stack.last_mut() {
                Some(top) if top.0 == v => {
                    top.1 = (top.1 + e).rem_euclid(n);
                    if top.1 == 0 {
                        stack.pop();
                    }
                }
                _ if e.rem_euclid(n) != 0 => stack.push((v, e.rem_euclid(n))),
                _ => {}
            }
        }
        let nf = normalize(&g, &word(&g, &a));
        let got: Vec<(usize, i64)> = nf.syllables().iter().map(|s| (s.vertex, i64::from(s.exponent))).collect();
        prop_assert_eq!(got, stack);
    }

    #[test]
    fn word_length_is_ball_distance(g in graphs(), a in prop::collection::vec((0usize..8, -3i64..4), 0..4)) {
        let x = normalize(&g, &word(&g, &a));
        let r = x.word_length(&g);
        prop_assume!(r <= 4);
        let b = ball(&g, r).unwrap();
        let i = b.index_of(&x).expect("element lies in the ball of its length");
        prop_assert_eq!(b.distance(i), r);
    }
}

#[test]
fn free_product_spheres_match_recursion() {
    for orders in [vec![2, 2], vec![2, 3], vec![3, 4, 5], vec![2, 2, 2]] {
        let g = product(&orders, 0);
        let got = cayley::sphere_sizes(&g, 5).unwrap();
        let want = common::free_product_spheres(&orders, 5);
        assert_eq!(got.iter().map(|&s| s as u64).collect::<Vec<_>>(), want, "{orders:?}");
    }
}

#[test]
fn cyclic_group_ball_is_a_cycle() {
    for n in 2..9u32 {
        let g = product(&[n], 0);
        let b = ball(&g, n).unwrap();
        assert_eq!(b.len(), n as usize);
        for i in 0..b.len() {
            let k = b.elements()[i].syllables().first().map_or(0, |s| s.exponent);
            assert_eq!(b.distance(i), common::cyclic_length(k, n));
        }
    }
}
