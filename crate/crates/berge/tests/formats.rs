use berge::formats::{
    format_coloring, format_cycle, format_graph, parse_coloring, parse_cycle, parse_graph, parse_scheme,
};
use berge::Error;
use berge_core::harness::{gen_coloring, Scheme};
use berge_core::{BergeCycle, Coloring, Graph, HyperParams};

fn parse_err(text: &str) -> (usize, String) {
    match parse_coloring(text) {
        Err(Error::Parse { line, message }) => (line, message),
        other => panic!("expected a parse error for {text:?}, got {other:?}"),
    }
}

#[test]
fn coloring_text_is_bit_exact() {
    let p = HyperParams::new(5, 3, 2).unwrap();
    let c = gen_coloring(&p, &Scheme::Digits(vec![1, 2])).unwrap();
    let text = format_coloring(&c);
    assert_eq!(text, "5 3 2\n1 2 1 2 1 2 1 2 1 2\n");
    assert_eq!(parse_coloring(&text).unwrap(), c);
    assert_eq!(format_coloring(&parse_coloring(&text).unwrap()), text);
}

#[test]
fn coloring_roundtrips_random() {
    for seed in 0..20 {
        let p = HyperParams::new(7, 3, 4).unwrap();
        let c = gen_coloring(&p, &Scheme::Random { seed }).unwrap();
        assert_eq!(parse_coloring(&format_coloring(&c)).unwrap(), c);
    }
}

#[test]
fn coloring_parser_rejects() {
    assert_eq!(parse_err("4 3 2\n1 1 1\n").0, 2);
    assert!(parse_err("4 3 2\n1 1 1 3\n").1.contains("outside"));
    assert!(parse_err("4 3 2\n1 1 1 0\n").1.contains("outside"));
    assert_eq!(parse_err("4 3 2\n1 1 1 1").0, 0);
    assert_eq!(parse_err("4  3 2\n1 1 1 1\n").0, 1);
    assert_eq!(parse_err("4 3 2\n1 1  1 1\n").0, 2);
    assert_eq!(parse_err("4 3\n1 1 1 1\n").0, 1);
    assert_eq!(parse_err("4 3 2\n1 1 1 x\n").0, 2);
    assert!(parse_err("4 3 2\n1 1 1 1\n\n").1.contains("2 lines"));
    assert!(matches!(parse_coloring("3 4 1\n1\n"), Err(Error::Core(_))));
}

#[test]
fn cycle_roundtrip() {
    let c = BergeCycle::new(vec![0, 1, 2, 3], vec![0, 3, 2, 1], Some(1));
    let text = format_cycle(&c);
    assert_eq!(text, "0 1 2 3\n0 3 2 1\n1\n");
    assert_eq!(parse_cycle(&text).unwrap(), c);
    let plain = BergeCycle::new(vec![0, 1, 2], vec![0, 1, 2], None);
    assert_eq!(parse_cycle(&format_cycle(&plain)).unwrap(), plain);
    assert_eq!(parse_cycle("0 1 2\n0 1 2\n\n").unwrap(), plain);
    assert!(parse_cycle("0 1 2\n0 1\n").is_err());
    assert!(parse_cycle("0 1 2\n").is_err());
    assert!(parse_cycle("0 1 2\n0 1 2\n1\n4\n").is_err());
    assert!(parse_cycle("0 -1 2\n0 1 2\n").is_err());
}

#[test]
fn graph_roundtrip() {
    let g = Graph::petersen();
    assert_eq!(parse_graph(&format_graph(&g)).unwrap(), g);
    let h = parse_graph("# a path\n3\n0 1\n\n1 2\n").unwrap();
    assert_eq!(h.edges().collect::<Vec<_>>(), [(0, 1), (1, 2)]);
    assert!(parse_graph("3\n0 3\n").is_err());
    assert!(parse_graph("3\n1 1\n").is_err());
    assert!(parse_graph("3\n0 1 2\n").is_err());
    assert!(parse_graph("").is_err());
}

#[test]
fn schemes() {
    assert_eq!(parse_scheme("uniform:2").unwrap(), Scheme::Uniform(2));
    assert_eq!(parse_scheme("random:77").unwrap(), Scheme::Random { seed: 77 });
    assert_eq!(parse_scheme("digits:1212").unwrap(), Scheme::Digits(vec![1, 2, 1, 2]));
    assert_eq!(parse_scheme("digits:10,2").unwrap(), Scheme::Digits(vec![10, 2]));
    assert_eq!(parse_scheme("partition:1,1,2").unwrap(), Scheme::VertexPartition { labels: vec![1, 1, 2] });
    assert!(parse_scheme("uniform").is_err());
    assert!(parse_scheme("stripes:1").is_err());
    assert!(parse_scheme("random:-1").is_err());
}

#[test]
fn uniform_file_matches_uniform_coloring() {
    let p = HyperParams::new(6, 2, 1).unwrap();
    let text = format!("6 2 1\n{}\n", vec!["1"; 15].join(" "));
    assert_eq!(parse_coloring(&text).unwrap(), Coloring::uniform(p, 1).unwrap());
}
