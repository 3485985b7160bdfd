//! Rewrites the bundled corpus: `cargo run -p biskit --example gen_corpus [dir]`.

use std::path::PathBuf;

fn main() -> std::io::Result<()> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus"));
    std::fs::create_dir_all(&dir)?;
    for (file, text) in biskit::corpus::generate() {
        std::fs::write(dir.join(&file), text)?;
        println!("wrote {file}");
    }
    Ok(())
}
