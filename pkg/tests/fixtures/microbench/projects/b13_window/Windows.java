public class Windows {
    public static String windowText(String s, int start, int end) {
        return s.substring(start, start);
    }
}
