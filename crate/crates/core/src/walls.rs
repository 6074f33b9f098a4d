pub struct WallSequence;
