class Compare {
  boolean inRange(int value, int lo, int hi) {
    return value >= lo && value <= hi;
  }

  boolean outside(int value, int lo, int hi) {
    return value < lo || value > hi;
  }

  int mix(int a, int b) {
    return a * b + a % 2 - b / 3;
  }
}
