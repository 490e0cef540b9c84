use htype_core::tables::{Diff, EmitterRegistry, ReproduceOptions, ReproducerRegistry};

fn cell(key: &str, column: &str, expected: &str, computed: &str) -> Diff {
    Diff::Cell {
        key: key.into(),
        column: column.into(),
        expected: expected.into(),
        computed: computed.into(),
    }
}

#[test]
fn an_table_differs_only_in_known_cells() {
    let r = ReproducerRegistry::default()
        .reproduce("3a", &ReproduceOptions::default())
        .unwrap();
    assert_eq!(r.computed.rows.len(), 10);
    assert_eq!(
        r.diffs,
        vec![
            cell("7#1", "Restrictions", "n>8", "n>7"),
            cell("8#1", "(i,j)", "(1,n-8)", "(1,n-7)"),
            cell("8#1", "Restrictions", "n>9, n≡0 mod 8", "n>8, n≡8 mod 16"),
            cell("8#2", "Restrictions", "n>5, n≡1 mod 4", "n>5, n≡5 mod 8"),
        ]
    );
}

#[test]
fn growth_tables_without_long_runs() {
    let reg = ReproducerRegistry::default();
    let opts = ReproduceOptions::default();
    let t8 = reg.reproduce("8", &opts).unwrap();
    assert!(t8.is_match(), "{}", t8.summary());
    let t9 = reg.reproduce("9", &opts).unwrap();
    assert!(t9.is_match(), "{}", t9.summary());
    assert_eq!(t9.computed.rows.len(), 13);
    assert_eq!(t9.skipped.len(), 6);
}

#[test]
fn smallest_max_degree_that_shows_termination() {
    let opts = ReproduceOptions {
        max_degree: 3,
        ..ReproduceOptions::default()
    };
    let reg = ReproducerRegistry::default();
    let t8 = reg.reproduce("8", &opts).unwrap();
    assert!(t8.is_match(), "{}", t8.summary());
    // One degree less cannot see g_3 = 0.
    let short = ReproduceOptions {
        max_degree: 2,
        ..ReproduceOptions::default()
    };
    let t8 = reg.reproduce("8", &short).unwrap();
    assert_eq!(t8.diffs.len(), 18);
}

#[test]
fn emitters_are_deterministic() {
    let reg = ReproducerRegistry::default();
    let emitters = EmitterRegistry::default();
    let opts = ReproduceOptions::default();
    for id in ["3", "5", "4a"] {
        let a = reg.get(id).unwrap().generate(&opts).unwrap().doc;
        let b = reg.get(id).unwrap().generate(&opts).unwrap().doc;
        for name in emitters.names() {
            let e = emitters.get(name).unwrap();
            assert_eq!(e.emit(&a).unwrap(), e.emit(&b).unwrap());
        }
    }
}

#[test]
fn bold_cells_follow_the_screen() {
    let r = ReproducerRegistry::default()
        .reproduce("5", &ReproduceOptions::default())
        .unwrap();
    let bold: Vec<String> = r
        .computed
        .rows
        .iter()
        .filter(|row| row[2].bold)
        .map(|row| format!("{} {}", row[0].text, row[1].text))
        .collect();
    assert_eq!(bold, vec!["E6 Σ{1,6}", "F4 Σ4"]);
}
