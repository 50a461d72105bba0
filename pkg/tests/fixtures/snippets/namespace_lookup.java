class NamespaceResolver {
  void replace(String namespace) {
    if (namespace == null) {
      compiler.report();
    } else {
      int indexOfDot = namespace.indexOf('.');
      if (indexOfDot == -1) {
        compiler.getNodeForCodeInsertion(minimumModule);
      }
    }
  }
}
