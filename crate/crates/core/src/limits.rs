/// Caps on the exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest isometric dimension accepted by pc-minor enumeration.
    pub idim: usize,
    /// Largest number of cliques enumerated for simplex graphs, clique
    /// polynomials and clique complexes.
    pub cliques: usize,
    /// Largest number of face triples scanned by the full median-property check.
    pub face_triples: usize,
}

impl Limits {
    pub const DEFAULT_IDIM: usize = 12;
    pub const DEFAULT_CLIQUES: usize = 1 << 20;
    pub const DEFAULT_FACE_TRIPLES: usize = 1 << 18;
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            idim: Self::DEFAULT_IDIM,
            cliques: Self::DEFAULT_CLIQUES,
            face_triples: Self::DEFAULT_FACE_TRIPLES,
        }
    }
}
