use traintrack::diagrams::fixtures::{removable_edge_figure, FIGURE_F, FIGURE_G0, FIGURE_G1};
use traintrack::diagrams::{Endpoint, TrackGraph};

#[test]
fn g0_g1_is_the_only_removable_right_edge() {
    let d = removable_edge_figure();
    let mut graph = TrackGraph::from_word(&d);
    graph.erase_unary(FIGURE_F).unwrap();
    let edges = graph.removable_right_edges();
    assert_eq!(edges.len(), 1);
    assert_eq!(
        graph.endpoints(edges[0]),
        Some((Endpoint::Node(FIGURE_G0), Endpoint::Node(FIGURE_G1)))
    );
}

#[test]
fn figure_contracts() {
    let d = removable_edge_figure();
    let certificate = d.contract().unwrap();
    certificate.replay(&d).unwrap();
    assert_eq!(certificate.erasures() + certificate.deletions(), certificate.steps.len());
}

#[test]
fn figure_canonical_form_is_stable() {
    let d = removable_edge_figure();
    let canonical = d.canonicalize();
    assert!(canonical.equals(&d));
    assert_eq!(canonical.canonicalize(), canonical);
    let printed = traintrack::dsl::print(&canonical);
    assert_eq!(traintrack::dsl::parse_any(&printed).unwrap(), canonical);
}
