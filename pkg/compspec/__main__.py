from compspec.main import main

main()
