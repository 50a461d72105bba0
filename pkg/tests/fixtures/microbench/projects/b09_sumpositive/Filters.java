public class Filters {
    public static int sumPositive(int[] xs) {
        int total = 0;
        for (int i = 0; i < xs.length; i++) {
            int v = xs[i];
            total = total + v;
        }
        return total;
    }
}
