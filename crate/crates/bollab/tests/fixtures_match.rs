//! The shipped JSON fixtures must match the embedded catalog byte for byte;
//! regenerate with `bollab catalog --export crates/bollab/fixtures` after any
//! catalog change.

use bollab::catalog::{catalog, entry_to_json, fixture_file_name};

#[test]
fn fixtures_match_embedded_catalog() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    assert!(dir.is_dir(), "fixtures directory missing: {}", dir.display());
    let mut on_disk: std::collections::BTreeSet<String> = std::fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    for e in catalog() {
        let name = fixture_file_name(&e.id);
        let path = dir.join(&name);
        let disk = std::fs::read_to_string(&path)
            .unwrap_or_else(|_| panic!("missing fixture {}", path.display()));
        let expected = serde_json::to_string_pretty(&entry_to_json(e)).unwrap() + "\n";
        assert_eq!(disk, expected, "fixture {} diverges from the embedded entry", name);
        on_disk.remove(&name);
    }
    assert!(on_disk.is_empty(), "stale fixtures with no catalog entry: {on_disk:?}");
}

#[test]
fn fixture_parses_back_to_equivalent_tensor() {
    // A fixture file is valid CLI input: the tensor block round-trips.
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let text = std::fs::read_to_string(dir.join("BOL_III.2.json")).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let t: bollab::structures::TensorJson =
        serde_json::from_value(v["tensor"].clone()).unwrap();
    assert_eq!(t.dim, 3);
    let dot = t.bilinear_tensor().unwrap();
    assert_eq!(*dot.get(0, 1, 2), bollab::scalar::qi(1));
}
