public class WindowsCheck {
    static int failures = 0;

    static void check(String name, boolean ok) {
        if (!ok) {
            System.out.println("FAIL " + name);
            failures = failures + 1;
        }
    }

    public static void main(String[] args) {
        check("window_mid", Windows.windowText("abcdef", 1, 3).equals("bc"));
        check("window_full", Windows.windowText("xy", 0, 2).equals("xy"));
        check("window_empty", Windows.windowText("abc", 2, 2).equals(""));
        if (failures > 0) {
            System.exit(1);
        }
    }
}
