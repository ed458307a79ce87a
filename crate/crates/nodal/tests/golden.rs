//! Row reports must match the committed JSON byte for byte.
//! Set NODAL_BLESS=1 to rewrite the files.

use std::path::PathBuf;

use nodal::catalog::Tag;
use nodal::ideal::Budget;
use nodal::verify::verify_row;

fn golden_path(tag: Tag) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{tag}.json"))
}

#[test]
fn row_reports_match_golden_files() {
    let bless = std::env::var_os("NODAL_BLESS").is_some();
    let mut drift = Vec::new();
    for tag in Tag::ROWS {
        let got = verify_row(tag, &Budget::default()).to_json(false);
        let path = golden_path(tag);
        if bless {
            std::fs::write(&path, &got).unwrap();
            continue;
        }
        let want = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        if got != want {
            drift.push(tag);
        }
    }
    assert!(drift.is_empty(), "reports differ from golden files: {drift:?}");
}
