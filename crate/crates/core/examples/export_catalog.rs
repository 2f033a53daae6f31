//! Writes every catalog entry as an algebra file: `export_catalog <dir>`.

use std::path::PathBuf;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "data/catalog".into()));
    std::fs::create_dir_all(&dir)?;
    for e in colorcoh::catalog::entries() {
        let path = dir.join(format!("case{:02}.toml", e.id));
        std::fs::write(&path, colorcoh::format::catalog_file(e.id)?.to_toml())?;
        println!("{}", path.display());
    }
    Ok(())
}
