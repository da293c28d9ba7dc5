from cohera.main import main

main()
