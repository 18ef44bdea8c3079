mod common;

use cubegroup::{
    fixtures, generate_group, normal_form, orbit_tree, orbits, perm_image, standard_subgroup, two_orbit_check,
    word_matrix, Error,
};

#[test]
fn perm_image_is_the_perm_part_of_rho() {
    for g in common::admissible_graphs(4) {
        let grp = generate_group(&g).unwrap();
        for e in grp.elements() {
            assert_eq!(&perm_image(&g, &e.word).unwrap(), e.matrix.perm());
        }
        // a longer word for the same element: w followed by s s
        for e in grp.elements().iter().take(8) {
            let mut w = e.word.clone();
            w.extend([0, 0]);
            assert_eq!(word_matrix(&g, &w).unwrap(), e.matrix);
            assert_eq!(perm_image(&g, &w).unwrap(), perm_image(&g, &e.word).unwrap());
        }
    }
}

#[test]
fn orbit_blocks_are_invariant() {
    for g in common::admissible_graphs(5) {
        let parts = orbits(&g);
        let mut all: Vec<usize> = parts.blocks.concat();
        all.sort();
        assert_eq!(all, (0..g.rank()).collect::<Vec<_>>());
        for block in &parts.blocks {
            for t in 0..g.rank() {
                let mut image: Vec<usize> = block.iter().map(|&u| g.j(t, u)).collect();
                image.sort();
                assert_eq!(&image, block);
            }
        }
        if g.rank() >= 2 {
            assert!(two_orbit_check(&g).unwrap());
        }
    }
}

#[test]
fn product_decomposition_over_invariant_subsets() {
    for g in common::admissible_graphs(4).into_iter().filter(|g| g.rank() >= 2) {
        let grp = generate_group(&g).unwrap();
        let n = g.rank();
        let blocks = orbits(&g).blocks;
        // every union of orbits is invariant
        for pick in 1..(1u32 << blocks.len()) - 1 {
            let t: Vec<usize> = (0..blocks.len())
                .filter(|&i| pick >> i & 1 == 1)
                .flat_map(|i| blocks[i].clone())
                .collect();
            let rest: Vec<usize> = (0..n).filter(|s| !t.contains(s)).collect();
            let ids = |members: &[usize]| -> Vec<usize> {
                let sub = standard_subgroup(&grp, members).unwrap();
                sub.elements().iter().map(|e| grp.find(&e.matrix).unwrap()).collect()
            };
            let (a, b) = (ids(&t), ids(&rest));
            assert_eq!(a.len() * b.len(), grp.order());
            assert_eq!(a.iter().filter(|x| b.contains(x)).collect::<Vec<_>>(), vec![&0]);
            let mut products: Vec<usize> = a.iter().flat_map(|&x| b.iter().map(move |&y| (x, y))).map(|(x, y)| grp.multiply(x, y)).collect();
            products.sort();
            products.dedup();
            assert_eq!(products.len(), grp.order());
        }
    }
}

#[test]
fn every_planar_reading_is_a_decomposition() {
    for g in common::admissible_graphs(4) {
        let grp = generate_group(&g).unwrap();
        let tree = orbit_tree(&g).unwrap();
        for ordering in tree.planar_orderings() {
            let nf = normal_form(&grp, &ordering).unwrap();
            for bits in 0..1u32 << g.rank() {
                assert_eq!(nf.bits(nf.element(bits)), bits);
            }
        }
    }
}

#[test]
fn tree_nodes_split() {
    fn walk(t: &cubegroup::OrbitTree) {
        if t.labels.len() >= 2 {
            assert!(t.children.len() >= 2);
        }
        let mut union: Vec<usize> = t.children.iter().flat_map(|c| c.labels.clone()).collect();
        union.sort();
        if !t.is_leaf() {
            assert_eq!(union, t.labels);
        }
        t.children.iter().for_each(walk);
    }
    for g in common::admissible_graphs(5) {
        walk(&orbit_tree(&g).unwrap());
    }
}

#[test]
fn d4_element_list() {
    let g = fixtures::d4();
    let grp = generate_group(&g).unwrap();
    let nf = normal_form(&grp, &[0, 1, 2]).unwrap();
    let mut listed: Vec<String> = (0..8u32)
        .map(|bits| {
            let f = nf.factors(bits);
            if f.is_empty() { "1".to_string() } else { f.iter().map(|&s| g.labels().name(s).as_str()).collect() }
        })
        .collect();
    listed.sort();
    let mut want = vec!["1", "a", "b", "c", "ab", "ac", "bc", "abc"];
    want.sort();
    assert_eq!(listed, want);
    assert!(matches!(normal_form(&grp, &[1, 0, 2]), Err(Error::NotADecomposition { .. })));
}
