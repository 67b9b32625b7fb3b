use std::collections::BTreeSet;

use remmelkit::cayley::{count_functions, func_to_tree, tree_to_func, EndoFunction, LabeledTree};

#[test]
fn seven_vertices_exhaustive() {
    let n = 7;
    let total = count_functions(n).unwrap();
    assert_eq!(total, 16807);
    let mut trees = BTreeSet::new();
    for r in 0..total {
        let t = LabeledTree::unrank(r, n).unwrap();
        assert_eq!(t.rank().unwrap(), r);
        trees.insert(t);
    }
    assert_eq!(trees.len() as u128, total);
}

#[test]
fn four_vertex_roundtrip() {
    for r in 0..16 {
        assert_eq!(EndoFunction::unrank(r, 4).unwrap().rank(), r);
    }
}

#[test]
fn worked_example() {
    let f = EndoFunction::parse(12, "3,3,7,1,3,8,4,12,7,10").unwrap();
    let t = func_to_tree(&f);
    let want: LabeledTree = "9-12\n4-7\n7-8\n10-7\n11-10\n6-3\n2-3\n5-1\n12-4\n8-3\n3-1\n".parse().unwrap();
    assert_eq!(t, want);
    assert_eq!(tree_to_func(&want).unwrap(), f);
}
