public class Ranges {
    public static int midpoint(int lo, int hi) {
        int mid = (lo + hi) / 2;
        return mid;
    }
}
