use cayley_embed::cayley::cayley_graph;
use cayley_embed::classify::{classify_right_group, decide_generating_set, Rule, Verdict};
use cayley_embed::graph::named;
use cayley_embed::groupspec::{parse_generators, GroupSpec};
use cayley_embed::iso::find_isomorphism;
use cayley_embed::topology::{exact_genus, face_trace, heuristic_upper, EmbeddingCertificate, RotationSystem};

fn build(spec: &str, gens: &str) -> cayley_embed::graph::SimpleGraph {
    let spec: GroupSpec = spec.parse().unwrap();
    let t = spec.table().unwrap();
    let c = parse_generators(&spec, &t, gens).unwrap();
    cayley_graph(&t, &c)
}

#[test]
fn spec_to_graph_to_genus() {
    let k33 = build("Z2xR3", "(1,*)");
    assert!(find_isomorphism(&k33, &named::complete_bipartite(3, 3)).unwrap().is_some());
    assert_eq!(exact_genus(&k33, 1_000_000).exact(), Some(1));

    let c8 = build("Z8", "1");
    assert_eq!(c8, named::cycle(8));
    assert_eq!(exact_genus(&c8, 1_000).exact(), Some(0));
}

#[test]
fn certificate_text_round_trip() {
    let g = build("Z4xR2", "(1,*)");
    let cert = heuristic_upper(&g, 200_000, 7);
    assert_eq!(cert.genus, 1);
    let back = EmbeddingCertificate::from_text(&cert.to_text()).unwrap();
    assert_eq!(back.graph, g);
    assert_eq!(back.genus, cert.genus);
    assert_eq!(back.face_count(), cert.face_count());
}

#[test]
fn bad_rotation_is_rejected() {
    let g = named::cycle(4);
    let rot = RotationSystem::new(vec![vec![1, 3], vec![0, 2], vec![1, 3], vec![2]]);
    assert!(face_trace(&g, &rot).is_err());
}

#[test]
fn verdicts_for_named_right_groups() {
    let cases = [("Z5", 2, Verdict::Toroidal), ("Z4", 3, Verdict::GenusAtLeastTwo), ("D3", 1, Verdict::Planar), ("Z3", 3, Verdict::Toroidal)];
    for (name, r, want) in cases {
        let g: GroupSpec = name.parse().unwrap();
        let rec = classify_right_group(name, &g.table().unwrap(), r).unwrap();
        assert_eq!(rec.verdict, want, "{name} r={r}");
        assert!(rec.is_sound(&g.table().unwrap()).unwrap());
    }
}

#[test]
fn k55_rule_fires_at_r5() {
    let spec: GroupSpec = "Z7".parse().unwrap();
    let t = spec.table().unwrap();
    let c = parse_generators(&spec, &t, "1").unwrap();
    let d = decide_generating_set(&t, &c, 5).unwrap();
    assert_eq!(d.verdict, Verdict::GenusAtLeastTwo);
    assert_eq!(d.rule, Rule::R5K55);
}
