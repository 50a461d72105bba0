class StringScanner {
  int findFirst(String text, String needle) {
    return text.indexOf(needle);
  }

  int findAfter(String text, String needle, int from) {
    int at = text.indexOf(needle, from);
    return normalize(at);
  }

  int normalize(int position) {
    return Math.max(position, -1);
  }

  String describe(int position) {
    return String.valueOf(position);
  }
}
