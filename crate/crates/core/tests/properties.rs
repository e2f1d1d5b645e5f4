use chromaglue::esym::ESym;
use chromaglue::expr::{Atom, GraphExpr, Wrap};
use chromaglue::forest::{x_forest, x_from_matrix};
use chromaglue::graph::{Graph, StandardKind};
use chromaglue::json::{esym_from_json, esym_to_json};
use chromaglue::oracle::chromatic_e;
use chromaglue::tableau::hikita_x;
use chromaglue::verify::{check_forest_break, check_gluing, check_tableau_break};
use chromaglue::{Exec, Limits};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn random_graph(n: usize, seed: u64) -> Graph {
    Graph::random(n, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap()
}

fn nuig(n: usize, pick: usize) -> Graph {
    let all = Graph::enumerate_nuigs(n).unwrap();
    all[pick % all.len()].clone()
}

fn atom() -> impl Strategy<Value = Atom> {
    prop_oneof![
        (1usize..5).prop_map(|n| Atom::Family(StandardKind::Path, n)),
        (1usize..5).prop_map(|n| Atom::Family(StandardKind::Complete, n)),
        (2usize..5).prop_map(|n| Atom::Family(StandardKind::AlmostComplete, n)),
        (3usize..6).prop_map(|n| Atom::Family(StandardKind::Cycle, n)),
        (1usize..5, any::<u64>()).prop_map(|(n, s)| Atom::Literal(random_graph(n, s))),
    ]
}

fn expr() -> impl Strategy<Value = GraphExpr> {
    (prop::collection::vec(atom(), 1..4), 0..3u8).prop_map(|(atoms, w)| GraphExpr {
        atoms,
        wrap: [Wrap::None, Wrap::Circ, Wrap::DirectedCirc][w as usize],
    })
    .prop_filter("circular gluing needs two vertices", |e| {
        e.wrap == Wrap::None || e.chain().unwrap().n() >= 2
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn printed_expressions_parse_back(e in expr()) {
        let text = e.to_string();
        let back = GraphExpr::parse(&text).unwrap();
        prop_assert_eq!(back.to_string(), text.clone());
        prop_assert_eq!(back.chain().unwrap(), e.chain().unwrap());
        let spaced = text.replace('+', " + ").replace('(', " ( ");
        prop_assert_eq!(GraphExpr::parse(&spaced).unwrap().chain().unwrap(), e.chain().unwrap());
    }

    #[test]
    fn glue_is_associative(a in 1usize..4, b in 1usize..4, c in 1usize..4, s in any::<u64>()) {
        let (g, h, k) = (random_graph(a, s), random_graph(b, s ^ 1), random_graph(c, s ^ 2));
        prop_assert_eq!(
            g.glue(&h).unwrap().glue(&k).unwrap(),
            g.glue(&h.glue(&k).unwrap()).unwrap()
        );
    }

    #[test]
    fn four_routes_agree_at_q1(n in 1usize..7, s in any::<u64>()) {
        let g = random_graph(n, s);
        let lim = Limits::default();
        let x = chromatic_e(&g, false, &lim, Exec::Sequential).unwrap();
        prop_assert_eq!(&x, &chromatic_e(&g, false, &lim, Exec::Parallel).unwrap());
        prop_assert_eq!(&x, &x_forest(&g, false, &lim, Exec::Parallel).unwrap());
        prop_assert_eq!(&x, &x_from_matrix(&g, false, &lim, Exec::Parallel).unwrap());
    }

    #[test]
    fn nuig_routes_agree_in_q(n in 1usize..7, pick in any::<usize>()) {
        let g = nuig(n, pick);
        let lim = Limits::default();
        let x = chromatic_e(&g, true, &lim, Exec::Parallel).unwrap();
        prop_assert_eq!(&x, &hikita_x(&g, &lim, Exec::Sequential).unwrap());
        prop_assert_eq!(&x, &x_from_matrix(&g, true, &lim, Exec::Parallel).unwrap());
    }

    #[test]
    fn json_round_trip(n in 1usize..6, pick in any::<usize>()) {
        let x: ESym = chromatic_e(&nuig(n, pick), true, &Limits::default(), Exec::Parallel).unwrap();
        let text = serde_json::to_string(&esym_to_json(&x)).unwrap();
        prop_assert_eq!(esym_from_json(&serde_json::from_str(&text).unwrap()).unwrap(), x);
    }

    #[test]
    fn gluing_on_random_pairs(a in 1usize..5, b in 1usize..5, s in any::<u64>()) {
        let (g, h) = (random_graph(a, s), random_graph(b, !s));
        let m = check_gluing(&g, &h, false, 2, &Limits::default(), Exec::Parallel).unwrap();
        prop_assert!(m.is_empty(), "{:?}", m);
    }

    #[test]
    fn forest_break_on_random_pairs(a in 1usize..5, b in 1usize..4, j in 1usize..3, s in any::<u64>()) {
        let (g, h) = (random_graph(a, s), random_graph(b, !s));
        let m = check_forest_break(&g, &h, j, &Limits::default()).unwrap();
        prop_assert!(m.is_empty(), "{:?}", m);
    }

    #[test]
    fn tableau_break_on_nuig_pairs(a in 1usize..5, b in 1usize..5, j in 1usize..3, p in any::<usize>(), r in any::<usize>()) {
        let m = check_tableau_break(&nuig(a, p), &nuig(b, r), j, &Limits::default()).unwrap();
        prop_assert!(m.is_empty(), "{:?}", m);
    }
}
