mod common;

use proptest::prelude::*;

use common::listed_roles;

use sudoku_hcp::hcp::{all_roles, label_of, role_of, vertex_count_formula, Labels, VertexRole};

#[test]
fn labels_match_listing_order() {
    for n in [4, 9] {
        let listed = listed_roles(n);
        assert_eq!(listed.len(), vertex_count_formula(n));
        assert_eq!(all_roles(n).unwrap(), listed);
        for (pos, role) in listed.iter().enumerate() {
            let label = pos as u32 + 1;
            assert_eq!(label_of(*role, n).unwrap(), label);
            assert_eq!(role_of(label, n).unwrap(), *role);
        }
    }
}

#[test]
fn closed_form_puzzle_labels() {
    for n in [4usize, 9] {
        let labels = Labels::new(n).unwrap();
        let x0 = 3 * n * n + 2 * n + 3;
        let v0 = x0 + 3 * n * n * n;
        for i in 1..=n {
            for j in 1..=n {
                let v = v0 + (i - 1) * n + (j - 1);
                assert_eq!(labels.end_puzzle(i, j) as usize, v);
                for k in 1..=n {
                    let x = x0 + 3 * ((i - 1) * n * n + (j - 1) * n + (k - 1));
                    assert_eq!(labels.puzzle(i, j, k, 1) as usize, x);
                }
            }
        }
    }
    let l9 = Labels::new(9).unwrap();
    assert_eq!(l9.end_puzzle(1, 1), 2451);
    assert_eq!(l9.puzzle(1, 1, 1, 1), 264);
}

#[test]
fn out_of_range_rejected() {
    assert!(role_of(0, 4).is_err());
    assert!(role_of(475, 4).is_err());
    assert!(label_of(VertexRole::Block { block: 5, value: 1 }, 4).is_err());
    assert!(label_of(
        VertexRole::Puzzle {
            row: 1,
            col: 1,
            value: 1,
            part: 4
        },
        4
    )
    .is_err());
    assert!(Labels::new(5).is_err());
}

proptest! {
    #[test]
    fn role_label_bijection(n in prop::sample::select(vec![4usize, 9, 16]), seed in any::<u32>()) {
        let total = vertex_count_formula(n) as u32;
        let label = seed % total + 1;
        let role = role_of(label, n).unwrap();
        prop_assert_eq!(label_of(role, n).unwrap(), label);
    }
}
