public class Absolute {
    public static int absValue(int n) {
        if (n < 0) {
            return -n;
        }
        return n;
    }
}
