pub struct ParticleSymbol;
pub struct ParticleWord;
