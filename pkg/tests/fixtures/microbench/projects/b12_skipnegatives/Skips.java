public class Skips {
    public static int sumSkipNegatives(int[] a) {
        int total = 0;
        int i = 0;
        while (i < a.length) {
            if (a[i] < 0) {
                continue;
            }
            total = total + a[i];
            i = i + 1;
        }
        return total;
    }
}
